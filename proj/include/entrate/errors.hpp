// Copyright 2026 The entrate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace entrate {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value (usually an eigenvalue or a scalar parameter) lies outside the
/// domain of the function being applied to it.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Subsystem dimensions do not match the operator or vector they describe.
class LayoutError : public Error {
 public:
  using Error::Error;
};

/// Invalid sampler or configuration parameter.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed one of its invariants.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace entrate

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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "entrate/errors.hpp"
#include "entrate/linalg.hpp"

namespace entrate {

enum class FunctionKind { Log, SignedPower, Custom };

/// Closed-or-open interval [lower, upper] on which a scalar function is defined.
struct Interval {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  bool lower_open = false;

  bool contains(double t) const {
    return (lower_open ? t > lower : t >= lower) && t <= upper;
  }
};

inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Compact rendering for labels: shortest of %g that round-trips, else %.17g.
inline std::string short_number(double v) {
  char buf[64];
  for (int prec = 6; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  return format_number(v);
}

/// Monotonically increasing function f used inside commutators [X, f(Y)], with
/// its antiderivative F(q) = int_0^q f(t) dt and, where known, its inverse.
class ScalarFunction {
 public:
  using Fn = std::function<double(double)>;

  /// Checks monotonicity on a 10^3-point uniform grid of the domain
  /// intersected with (0, 1].
  ScalarFunction(FunctionKind kind, std::string name, Fn f, Fn antiderivative,
                 std::optional<Fn> inverse, Interval domain, double beta = 0.0)
      : kind_(kind),
        name_(std::move(name)),
        f_(std::move(f)),
        antiderivative_(std::move(antiderivative)),
        inverse_(std::move(inverse)),
        domain_(domain),
        beta_(beta) {
    check_monotone();
  }

  static ScalarFunction log() {
    return ScalarFunction(
        FunctionKind::Log, "log", [](double t) { return std::log(t); },
        [](double q) { return q > 0.0 ? q * std::log(q) - q : 0.0; },
        Fn([](double v) { return std::exp(v); }), Interval{0.0, kInf, true});
  }

  /// f(t) = sign(beta) t^beta.
  static ScalarFunction signed_power(double beta) {
    if (beta == 0.0 || !std::isfinite(beta)) {
      throw DomainError("signed_power: beta must be finite and nonzero");
    }
    const double s = beta > 0.0 ? 1.0 : -1.0;
    Fn anti;
    if (beta > -1.0) {
      anti = [beta, s](double q) { return q > 0.0 ? s * std::pow(q, beta + 1.0) / (beta + 1.0) : 0.0; };
    }
    Fn inv = [beta, s](double v) {
      if (!(s * v > 0.0)) throw DomainError("signed_power inverse: value outside range");
      return std::pow(s * v, 1.0 / beta);
    };
    return ScalarFunction(
        FunctionKind::SignedPower, "power:" + short_number(beta),
        [beta, s](double t) { return s * std::pow(t, beta); }, std::move(anti), std::move(inv),
        Interval{0.0, kInf, beta < 0.0}, beta);
  }

  /// User-supplied function; pass an empty `antiderivative` when F is unknown.
  static ScalarFunction custom(std::string name, Fn f, Fn antiderivative, std::optional<Fn> inverse,
                               Interval domain) {
    return ScalarFunction(FunctionKind::Custom, std::move(name), std::move(f), std::move(antiderivative),
                          std::move(inverse), domain);
  }

  double operator()(double t) const {
    if (!domain_.contains(t)) throw DomainError(name_ + ": argument " + format_number(t) + " outside domain");
    return f_(t);
  }

  FunctionKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  /// Exponent of a SignedPower; 0 for other kinds.
  double beta() const { return beta_; }
  const Interval& domain() const { return domain_; }

  SpectralDomain spectral_domain() const { return {domain_.lower, domain_.lower_open}; }

  bool has_antiderivative() const { return static_cast<bool>(antiderivative_); }
  double antiderivative(double q) const {
    if (!antiderivative_) throw DomainError(name_ + ": antiderivative int_0^q f is not defined");
    return antiderivative_(q);
  }

  bool has_inverse() const { return inverse_.has_value(); }
  double inverse(double v) const {
    if (!inverse_) throw DomainError(name_ + ": no inverse available");
    return (*inverse_)(v);
  }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  void check_monotone() const {
    constexpr int kGrid = 1000;
    const double hi = std::min(domain_.upper, 1.0);
    double lo = domain_.lower;
    if (domain_.lower_open) lo += (hi - lo) / kGrid;
    if (!(hi > lo)) throw InvariantError(name_ + ": empty domain on (0, 1]");
    double prev = f_(lo);
    for (int k = 1; k < kGrid; ++k) {
      const double t = lo + (hi - lo) * k / (kGrid - 1);
      const double v = f_(t);
      if (!(v >= prev)) throw InvariantError(name_ + ": not monotonically increasing near " + format_number(t));
      prev = v;
    }
  }

  FunctionKind kind_;
  std::string name_;
  Fn f_;
  Fn antiderivative_;
  std::optional<Fn> inverse_;
  Interval domain_;
  double beta_;
};

/// f(Y) = U f(D) U^dagger; throws DomainError when an eigenvalue of Y lies
/// outside the domain of f.
inline HermitianOperator matrix_function(const HermitianOperator& y, const ScalarFunction& f) {
  return apply_spectral(y, [&f](double t) { return f(t); }, f.spectral_domain());
}

/// Parses `log` or `power:<beta>`.
inline ScalarFunction parse_function(std::string_view text) {
  if (text == "log" || text == "ln") return ScalarFunction::log();
  constexpr std::string_view kPower = "power:";
  if (text.substr(0, kPower.size()) == kPower) {
    const std::string num(text.substr(kPower.size()));
    char* end = nullptr;
    const double beta = std::strtod(num.c_str(), &end);
    if (num.empty() || end != num.c_str() + num.size()) {
      throw ParameterError("invalid power exponent in '" + std::string(text) + "'");
    }
    return ScalarFunction::signed_power(beta);
  }
  throw ParameterError("unknown function '" + std::string(text) + "' (expected log or power:<beta>)");
}

}  // namespace entrate

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

// Shared fixtures for the unit tests: seeded random inputs and oracles that
// deliberately avoid the library code paths under test.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "entrate/entrate.hpp"

namespace entrate::testing {

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

/// Random ensemble of dimension d with Y floored at min_eig.
inline Ensemble2 random_ensemble(int d, double p, double min_eig, Rng& rng) {
  return Ensemble2(p, sample_density(d, 0.0, rng), sample_density(d, min_eig / (1.0 - p), rng));
}

/// Random unit-norm Hamiltonian.
inline HermitianOperator random_hamiltonian(int d, Rng& rng) {
  return normalize_operator_norm(sample_hermitian(d, rng));
}

/// Pure state whose reduced state on (a, A) has every eigenvalue >= floor.
inline StateVector conditioned_state(const Layout& layout, double floor, Rng& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    StateVector psi = sample_pure_state(layout, rng);
    if (min_eigenvalue(reduced_state(psi, {0, 1}).op()) >= floor) return psi;
  }
  throw std::runtime_error("conditioned_state: rejection sampling did not converge");
}

/// Column vector from a list of amplitudes.
inline Vector ket(std::initializer_list<Complex> amps) {
  Vector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (Complex a : amps) v(i++) = a;
  return v;
}

/// X = 0.1 |+><+|, Y = diag(0.9, 0.1): the hand-computable 2x2 ensemble.
inline Ensemble2 golden_ensemble() {
  const double s = 1.0 / std::sqrt(2.0);
  const Vector plus = ket({s, s});
  const DensityOperator rho1 = DensityOperator::pure(plus);
  const HermitianOperator y = HermitianOperator::diagonal({0.9, 0.1});
  const DensityOperator rho2((1.0 / 0.9) * (y - 0.1 * rho1.op()));
  return Ensemble2(0.1, rho1, rho2);
}

}  // namespace entrate::testing

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
#include <string>
#include <utility>

#include "entrate/errors.hpp"
#include "entrate/linalg.hpp"

namespace entrate {

/// Two-state ensemble {(p, rho1), (1 - p, rho2)} with X = p rho1 and
/// Y = p rho1 + (1 - p) rho2. Construction certifies 0 <= X <= Y <= I.
class Ensemble2 {
 public:
  static constexpr double kTolerance = 1e-10;

  Ensemble2(double p, DensityOperator rho1, DensityOperator rho2)
      : p_(p), rho1_(std::move(rho1)), rho2_(std::move(rho2)) {
    if (!(p_ > 0.0 && p_ < 1.0)) throw InvariantError("Ensemble2: p must lie in (0, 1)");
    if (rho1_.dim() != rho2_.dim()) throw InvariantError("Ensemble2: state dimensions differ");
    x_ = p_ * rho1_.op();
    y_ = x_ + (1.0 - p_) * rho2_.op();
    if (std::abs(x_.trace() - p_) > kTolerance) throw InvariantError("Ensemble2: Tr X != p");
    if (std::abs(y_.trace() - 1.0) > kTolerance) throw InvariantError("Ensemble2: Tr Y != 1");
    if (min_eigenvalue(x_) < -kTolerance) throw InvariantError("Ensemble2: X is not positive");
    if (min_eigenvalue(y_ - x_) < -kTolerance) throw InvariantError("Ensemble2: X <= Y fails");
    if (min_eigenvalue(HermitianOperator::identity(dim()) - y_) < -kTolerance) {
      throw InvariantError("Ensemble2: Y <= I fails");
    }
  }

  double p() const { return p_; }
  int dim() const { return rho1_.dim(); }
  const DensityOperator& rho1() const { return rho1_; }
  const DensityOperator& rho2() const { return rho2_; }
  const HermitianOperator& x() const { return x_; }
  const HermitianOperator& y() const { return y_; }
  DensityOperator expected_state() const { return DensityOperator(y_); }

 private:
  double p_;
  DensityOperator rho1_;
  DensityOperator rho2_;
  HermitianOperator x_;
  HermitianOperator y_;
};

inline Ensemble2 make_ensemble(double p, DensityOperator rho1, DensityOperator rho2) {
  return Ensemble2(p, std::move(rho1), std::move(rho2));
}

/// rho(t) = p rho1 + (1 - p) e^{-iHt} rho2 e^{iHt}.
inline DensityOperator evolve_ensemble(const Ensemble2& e, const HermitianOperator& h, double t) {
  if (h.dim() != e.dim()) throw LayoutError("evolve_ensemble: Hamiltonian dimension mismatch");
  if (t == 0.0) return e.expected_state();
  const Matrix u = propagator(h, t);
  const HermitianOperator rotated = conjugate(e.rho2().op(), u);
  return DensityOperator(e.x() + (1.0 - e.p()) * rotated);
}

/// Pure states of this toolkit carry the four-party layout (d_a, d_A, d_B, d_b).
inline void check_four_party(const Layout& layout) {
  if (layout.size() != 4) throw LayoutError("expected a four-party layout (d_a, d_A, d_B, d_b)");
}

/// (I_a (x) e^{i H_AB t} (x) I_b) psi.
inline StateVector evolve_pure(const StateVector& psi, const HermitianOperator& h_ab, double t) {
  check_four_party(psi.layout());
  const Layout& l = psi.layout();
  if (h_ab.dim() != l[1] * l[2]) throw LayoutError("evolve_pure: H_AB dimension differs from d_A d_B");
  if (t == 0.0) return psi;
  const Matrix u = propagator(h_ab, -t);
  const int da = l[0], dab = l[1] * l[2], db = l[3];
  Vector out = Vector::Zero(psi.dim());
  const Vector& in = psi.amplitudes();
  // Index order: a (slowest), then AB, then b (fastest).
  for (int a = 0; a < da; ++a) {
    for (int b = 0; b < db; ++b) {
      Vector slice(dab);
      for (int k = 0; k < dab; ++k) slice(k) = in((a * dab + k) * db + b);
      const Vector mapped = u * slice;
      for (int k = 0; k < dab; ++k) out((a * dab + k) * db + b) = mapped(k);
    }
  }
  return StateVector(std::move(out), l);
}

/// State with the parties read in reverse order (b, B, A, a).
inline StateVector mirror(const StateVector& psi) {
  const Layout& l = psi.layout();
  const int n = static_cast<int>(l.size());
  Layout rl(l.rbegin(), l.rend());
  Vector out(psi.dim());
  std::vector<int> digits(n);
  for (int full = 0; full < psi.dim(); ++full) {
    int rem = full;
    for (int k = n - 1; k >= 0; --k) {
      digits[k] = rem % l[k];
      rem /= l[k];
    }
    int rev = 0;
    for (int k = n - 1; k >= 0; --k) rev = rev * l[k] + digits[k];
    out(rev) = psi.amplitudes()(full);
  }
  return StateVector(std::move(out), std::move(rl));
}

/// Swaps the two tensor factors of an operator on C^{d1} (x) C^{d2}.
inline HermitianOperator swap_factors(const HermitianOperator& h, int d1, int d2) {
  if (h.dim() != d1 * d2) throw LayoutError("swap_factors: dimension mismatch");
  Matrix out(h.dim(), h.dim());
  auto idx = [&](int i) { return (i % d2) * d1 + i / d2; };
  for (int i = 0; i < h.dim(); ++i) {
    for (int j = 0; j < h.dim(); ++j) out(idx(i), idx(j)) = h.matrix()(i, j);
  }
  return HermitianOperator::hermitian_part(out);
}

/// rho_aA (x) I_B / d_B written as the ensemble {(p, rho_aAB), (1 - p, mu)}
/// with p = d_B^{-2}; X = p rho_aAB and Y = rho_aA (x) I_B / d_B.
struct BravyiEmbedding {
  Ensemble2 ensemble;
  double p;
  DensityOperator rho_aab;
  DensityOperator rho_aa;
  /// True when the parties were mirrored to enforce d_B <= d_A.
  bool mirrored = false;

  const DensityOperator& mu() const { return ensemble.rho2(); }
};

inline BravyiEmbedding bravyi_embedding(const StateVector& psi_in) {
  check_four_party(psi_in.layout());
  const bool mirrored = psi_in.layout()[2] > psi_in.layout()[1];
  const StateVector psi = mirrored ? mirror(psi_in) : psi_in;
  const Layout& l = psi.layout();
  const int db = l[2];
  if (db < 2) throw LayoutError("bravyi_embedding: need min(d_A, d_B) >= 2");
  const double p = 1.0 / (static_cast<double>(db) * db);
  DensityOperator rho_aab = reduced_state(psi, {0, 1, 2});
  DensityOperator rho_aa = reduced_state(psi, {0, 1});
  const HermitianOperator y = (1.0 / db) * kron(rho_aa.op(), HermitianOperator::identity(db));
  const HermitianOperator mu_op = (1.0 / (1.0 - p)) * (y - p * rho_aab.op());
  const double lo = min_eigenvalue(mu_op);
  if (lo < -Ensemble2::kTolerance) {
    throw InvariantError("bravyi_embedding: mu has eigenvalue " + std::to_string(lo));
  }
  DensityOperator mu(mu_op, Ensemble2::kTolerance);
  Ensemble2 e(p, rho_aab, std::move(mu));
  return {std::move(e), p, std::move(rho_aab), std::move(rho_aa), mirrored};
}

}  // namespace entrate

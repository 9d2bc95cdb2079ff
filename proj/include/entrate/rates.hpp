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

// Exact first-order entropy rates. With Hermitian H, X, G the quantity
// Tr(H i[X, G]) is real; for an entropy k1 Tr F(rho) + k2 the mixing rate is
//   Lambda(H) = k1 Tr(H i[X, F'(Y)])
// and the log-trace form carries an extra 1 / Tr F(Y). Entangling rates use
// rho_aAB in place of X and F'(rho_aA) (x) I_B in place of F'(Y).

#include <cmath>
#include <string>

#include "entrate/ensembles.hpp"
#include "entrate/entropy.hpp"
#include "entrate/errors.hpp"
#include "entrate/functions.hpp"
#include "entrate/linalg.hpp"

namespace entrate {

enum class RateKind { Mixing, Entangling, MaxMixing };

struct RateRecord {
  double value = 0.0;
  RateKind kind = RateKind::Mixing;
  std::string spec;
  double p = 0.0;
  Layout layout;
  bool witness_present = false;
};

inline constexpr double kDefaultDt = 1e-4;

/// Re Tr(H i[X, G]); throws if the imaginary residue exceeds 1e-10 relative.
inline double commutator_pairing(const HermitianOperator& h, const HermitianOperator& x,
                                 const HermitianOperator& g) {
  if (h.dim() != x.dim() || x.dim() != g.dim()) throw LayoutError("commutator pairing: dimension mismatch");
  const Matrix z = Complex(0.0, 1.0) * commutator(x.matrix(), g.matrix());
  const Complex tr = (h.matrix() * z).trace();
  const double scale = std::max(1.0, h.matrix().norm() * z.norm());
  if (std::abs(tr.imag()) > 1e-10 * scale) {
    throw Error("commutator pairing: imaginary residue " + std::to_string(tr.imag()));
  }
  return tr.real();
}

/// dS(rho(t))/dt at t = 0 for rho(t) = p rho1 + (1-p) e^{-iHt} rho2 e^{iHt}.
inline double mixing_rate(const Ensemble2& e, const HermitianOperator& h, const EntropySpec& spec) {
  if (h.dim() != e.dim()) throw LayoutError("mixing_rate: Hamiltonian dimension mismatch");
  const HermitianOperator g = spec.derivative_operator(e.y());
  double coef = spec.k1();
  if (spec.log_form()) coef /= spec.trace_generator(eigenvalues_desc(e.y()));
  return coef * commutator_pairing(h, e.x(), g);
}

/// Von Neumann mixing rate from the second component, i (1-p) Tr([rho2, ln rho] H).
inline double mixing_rate_from_second(const Ensemble2& e, const HermitianOperator& h) {
  const HermitianOperator log_y = apply_spectral(e.y(), [](double t) { return std::log(t); }, {0.0, true});
  const HermitianOperator x2 = (1.0 - e.p()) * e.rho2().op();
  return commutator_pairing(h, x2, log_y);
}

struct MaxMixingRate {
  /// ||[X, f(Y)]||_1.
  double value = 0.0;
  HermitianOperator h_opt;
};

inline MaxMixingRate max_mixing_rate(const Ensemble2& e, const ScalarFunction& f) {
  const CommutatorWitness w = commutator_witness(e.x(), matrix_function(e.y(), f));
  return {w.value, w.h_opt};
}

/// dE/dt at t = 0 for E = S(rho_aA) and psi(t) = (I (x) e^{i H_AB t} (x) I) psi.
inline double entangling_rate(const StateVector& psi, const HermitianOperator& h_ab, const EntropySpec& spec) {
  check_four_party(psi.layout());
  const Layout& l = psi.layout();
  if (h_ab.dim() != l[1] * l[2]) throw LayoutError("entangling_rate: H_AB dimension differs from d_A d_B");
  const DensityOperator rho_aab = reduced_state(psi, {0, 1, 2});
  const DensityOperator rho_aa = reduced_state(psi, {0, 1});
  const HermitianOperator g = kron(spec.derivative_operator(rho_aa.op()), HermitianOperator::identity(l[2]));
  const HermitianOperator h = embed(h_ab, l[0], 1);
  double coef = spec.k1();
  if (spec.log_form()) coef /= spec.trace_generator(eigenvalues_desc(rho_aa.op()));
  return coef * commutator_pairing(h, rho_aab.op(), g);
}

/// Central difference (S(rho(dt)) - S(rho(-dt))) / (2 dt) of the mixing entropy.
inline double rate_finite_difference(const Ensemble2& e, const HermitianOperator& h, const EntropySpec& spec,
                                     double dt = kDefaultDt) {
  if (!(dt > 0.0)) throw ParameterError("rate_finite_difference: dt must be positive");
  const double fwd = entropy_eval(evolve_ensemble(e, h, dt), spec);
  const double bwd = entropy_eval(evolve_ensemble(e, h, -dt), spec);
  return (fwd - bwd) / (2.0 * dt);
}

/// Central difference of the entanglement entropy S(rho_aA(t)).
inline double rate_finite_difference(const StateVector& psi, const HermitianOperator& h_ab,
                                     const EntropySpec& spec, double dt = kDefaultDt) {
  if (!(dt > 0.0)) throw ParameterError("rate_finite_difference: dt must be positive");
  const double fwd = entropy_eval(reduced_state(evolve_pure(psi, h_ab, dt), {0, 1}), spec);
  const double bwd = entropy_eval(reduced_state(evolve_pure(psi, h_ab, -dt), {0, 1}), spec);
  return (fwd - bwd) / (2.0 * dt);
}

}  // namespace entrate

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

// Closed-form upper bounds on commutator trace norms and entropy rates. Every
// bound comes back with a regime flag so callers can tell "bound violated"
// from "bound not proved for these parameters".

#include <cmath>
#include <limits>
#include <string>

#include "entrate/assumption.hpp"
#include "entrate/entropy.hpp"
#include "entrate/errors.hpp"
#include "entrate/functions.hpp"

namespace entrate {

struct BoundRecord {
  std::string name;
  double value = 0.0;
  /// p for commutator bounds, d_B for dimension bounds.
  double parameter = 0.0;
  bool regime_valid = false;
  std::string regime_note;
};

struct TheoremBound {
  double branch_p = 0.0;    // 9 p (f(1) - f(p))
  double branch_1mp = 0.0;  // 9 (1-p) (f(1) - f(1-p))
  double min = 0.0;
};

inline TheoremBound theorem_bound(double p, const ScalarFunction& f) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("theorem_bound: p must lie in (0, 1)");
  const double f1 = f(1.0);
  TheoremBound b;
  b.branch_p = 9.0 * p * (f1 - f(p));
  b.branch_1mp = 9.0 * (1.0 - p) * (f1 - f(1.0 - p));
  b.min = std::min(b.branch_p, b.branch_1mp);
  return b;
}

/// Explicit form of the commutator bound for f = sign(beta) t^beta, p <= 1/2.
inline double power_bound(double p, double beta) {
  if (beta == 0.0 || !std::isfinite(beta)) throw DomainError("power_bound: beta must be finite and nonzero");
  if (!(p > 0.0 && p <= 0.5)) throw DomainError("power_bound: p must lie in (0, 1/2]");
  const double q = 1.0 - p;
  if (beta >= 1.0) return 9.0 * p * (1.0 - std::pow(p, beta));
  if (beta > 0.0) return 9.0 * q * (1.0 - std::pow(q, beta));
  return 9.0 * q * (std::pow(q, beta) - 1.0);
}

inline BoundRecord power_bound_record(double p, double beta) {
  BoundRecord r{"power", power_bound(p, beta), p, true, {}};
  if (beta > 0.0) {
    const double pmax = gamma_threshold(beta).p_max;
    r.regime_valid = p < pmax;
    r.regime_note = "needs p < p_max = " + short_number(pmax);
  } else {
    r.regime_note = "negative power: all p";
  }
  return r;
}

/// F(1) - F(p) - F(1-p) with F(q) = int_0^q f (constant c = 1).
inline double ak_bound(double p, const ScalarFunction& f) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("ak_bound: p must lie in (0, 1)");
  return f.antiderivative(1.0) - f.antiderivative(p) - f.antiderivative(1.0 - p);
}

struct ClassicBounds {
  BoundRecord sim9;        // 9 p ln(1/p), proved for p <= 1/2
  BoundRecord lv;          // 4 sqrt(p (1-p)), proved for 1/100 < p < 99/100
  BoundRecord sim_binary;  // 9 S(p)
};

inline ClassicBounds classic_bounds(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("classic_bounds: p must lie in (0, 1)");
  ClassicBounds b;
  b.sim9 = {"sim9", -9.0 * p * std::log(p), p, p <= 0.5, "p <= 1/2"};
  b.lv = {"lv", 4.0 * std::sqrt(p * (1.0 - p)), p, p > 0.01 && p < 0.99, "1/100 < p < 99/100"};
  b.sim_binary = {"sim_binary", 9.0 * binary_entropy(p), p, true, "all p"};
  return b;
}

namespace detail {

inline void check_dim_bound_args(int d_b, double order, const char* what) {
  if (d_b < 2) throw DomainError(std::string(what) + ": d_B must be at least 2");
  if (!(order > 0.0) || order == 1.0 || !std::isfinite(order)) {
    throw DomainError(std::string(what) + ": order must be positive and different from 1");
  }
}

// Orders above 1 use the positive-power branch with beta = order - 1 and need
// p = d_B^{-2} below p_max(beta).
inline void set_dim_regime(BoundRecord& r, int d_b, double order) {
  if (order < 1.0) {
    r.regime_valid = true;
    r.regime_note = "order < 1: negative power, all d_B";
    return;
  }
  const double pmax = gamma_threshold(order - 1.0).p_max;
  const double p = 1.0 / (static_cast<double>(d_b) * d_b);
  r.regime_valid = p < pmax;
  r.regime_note = "needs d_B^-2 < p_max = " + short_number(pmax);
}

}  // namespace detail

/// Dimension bound on the Renyi-alpha entangling rate (||H|| = 1).
inline BoundRecord renyi_dim_bound(int d_b, double alpha) {
  detail::check_dim_bound_args(d_b, alpha, "renyi_dim_bound");
  const double d = d_b, inv2 = 1.0 / (d * d);
  double v;
  if (alpha > 2.0) {
    v = 9.0 * alpha / (alpha - 1.0) / d * (1.0 - std::pow(d, -2.0 * (alpha - 1.0)));
  } else if (alpha > 1.0) {
    v = 9.0 * alpha / (alpha - 1.0) * (d - 1.0 / d) * (1.0 - std::pow(1.0 - inv2, alpha - 1.0));
  } else {
    v = 9.0 * alpha / (1.0 - alpha) * (d - 1.0 / d) * (std::pow(1.0 - inv2, alpha - 1.0) - 1.0);
  }
  BoundRecord r{"renyi_dim", v, d, false, {}};
  detail::set_dim_regime(r, d_b, alpha);
  return r;
}

/// Dimension bound on the Tsallis-q entangling rate (||H|| = 1). For q < 1
/// the prefactor is q / (1 - q), which keeps the bound positive.
inline BoundRecord tsallis_dim_bound(int d_b, double q) {
  detail::check_dim_bound_args(d_b, q, "tsallis_dim_bound");
  const double d = d_b, inv2 = 1.0 / (d * d);
  double v;
  if (q >= 2.0) {
    v = 9.0 * q / (q - 1.0) * (std::pow(d, q - 1.0) - std::pow(d, 1.0 - q));
  } else if (q > 1.0) {
    v = 9.0 * q / (q - 1.0) * std::pow(d, q + 1.0) * (1.0 - inv2) * (1.0 - std::pow(1.0 - inv2, q - 1.0));
  } else {
    v = 9.0 * q / (1.0 - q) * std::pow(d, q + 1.0) * (1.0 - inv2) * (std::pow(1.0 - inv2, q - 1.0) - 1.0);
  }
  BoundRecord r{"tsallis_dim", v, d, false, {}};
  detail::set_dim_regime(r, d_b, q);
  return r;
}

/// Slopes at p = 0 of theorem_bound(p).min / 9 and ak_bound(p), estimated by
/// the secant from p = 0 (where both bounds vanish) to p = 1e-6.
struct DerivativeReport {
  std::string function;
  double theorem_slope = 0.0;
  double conjecture_slope = std::numeric_limits<double>::quiet_NaN();
  /// Expected slopes; +inf marks divergence, NaN marks "not applicable".
  double expected_theorem = 0.0;
  double expected_conjecture = 0.0;
  bool conjecture_applicable = false;
  /// False for functions without a reference claim (log).
  bool has_claim = true;
  bool theorem_matches = false;
  bool conjecture_matches = false;
  std::string note;
};

inline DerivativeReport derivative_at_zero_check(const ScalarFunction& f) {
  constexpr double kStep = 1e-6;
  constexpr double kRelTol = 0.05;
  constexpr double kDivergent = 1e3;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  DerivativeReport r;
  r.function = f.name();
  switch (f.kind()) {
    case FunctionKind::Log:
      r.has_claim = false;
      r.expected_theorem = kNaN;
      r.expected_conjecture = kNaN;
      r.note = "log: no reference slope; the min is the (1-p) branch with slope 1, S(p)/p grows like ln(1/p)";
      break;
    case FunctionKind::SignedPower: {
      const double b = f.beta();
      if (b >= 1.0) {
        r.expected_theorem = 1.0;
        r.expected_conjecture = 1.0;
        r.note = "beta >= 1: both slopes equal one";
      } else if (b > 0.0) {
        r.expected_theorem = b;
        r.expected_conjecture = 1.0;
        r.note = "0 < beta < 1: theorem slope beta, conjecture slope one";
      } else if (b > -1.0) {
        r.expected_theorem = -b;
        r.expected_conjecture = kInf;
        r.note = "-1 < beta < 0: theorem slope -beta, conjecture slope infinite";
      } else {
        r.expected_theorem = -b;
        r.expected_conjecture = kNaN;
        r.note = "beta <= -1: int_0^q f diverges, the conjecture does not apply";
      }
      break;
    }
    case FunctionKind::Custom:
      throw DomainError("derivative_at_zero_check: only log and power functions have reference slopes");
  }
  auto matches = [&](double slope, double expected) {
    if (std::isnan(expected)) return false;
    if (std::isinf(expected)) return slope > kDivergent;
    return std::abs(slope - expected) <= kRelTol * std::abs(expected);
  };
  r.theorem_slope = theorem_bound(kStep, f).min / 9.0 / kStep;
  r.theorem_matches = matches(r.theorem_slope, r.expected_theorem);
  r.conjecture_applicable = f.has_antiderivative();
  if (r.conjecture_applicable) {
    r.conjecture_slope = ak_bound(kStep, f) / kStep;
    r.conjecture_matches = matches(r.conjecture_slope, r.expected_conjecture);
  } else {
    r.conjecture_matches = r.has_claim && std::isnan(r.expected_conjecture);
  }
  return r;
}

}  // namespace entrate

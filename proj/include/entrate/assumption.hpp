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

// Growth condition on f under which the commutator bound
// ||[X, f(Y)]||_1 <= 9 p (f(1) - f(p)) is proved: for 0 < y < x <= 1,
//   f(x) - f(y) > f(1) - f(p)  implies  sqrt(y / x) (f(x) - f(y)) <= sqrt(p) (f(1) - f(p)).
// Closed forms cover power functions; arbitrary functions get a grid check.
// Grid checks certify at grid resolution only.

#include <cmath>
#include <string>
#include <vector>

#include "entrate/errors.hpp"
#include "entrate/functions.hpp"

namespace entrate {

struct GammaThreshold {
  /// beta + 1 - sqrt((beta + 1)^2 - 1), the smaller root of q^2 - 2(beta+1) q + 1.
  double gamma = 0.0;
  /// gamma^{1/beta}: the condition is proved for t^beta whenever p < p_max.
  double p_max = 0.0;
};

inline GammaThreshold gamma_threshold(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("gamma_threshold: beta must be positive");
  const double b1 = beta + 1.0;
  // 1 / (b1 + sqrt(b1^2 - 1)) equals the smaller root without cancellation.
  const double gamma = 1.0 / (b1 + std::sqrt(b1 * b1 - 1.0));
  return {gamma, std::pow(gamma, 1.0 / beta)};
}

struct NegativePowerCertificate {
  bool certified = false;
  std::string note;
};

/// -t^beta with beta < 0 satisfies the condition for every p in (0, 1).
inline NegativePowerCertificate negative_power_certified(double beta) {
  if (!(beta < 0.0)) throw DomainError("negative_power_certified: beta must be negative");
  std::string note = beta >= -2.0
                         ? "-2 <= beta < 0: q^2 - 2(beta+1)q + 1 has negative discriminant, so t0 < q for all q"
                         : "beta < -2: largest root of q^2 - 2(beta+1)q + 1 is negative, so t0 < q for all q >= 1";
  return {true, std::move(note)};
}

/// h_beta(t) = t (t + 1 - q)^{-1} |1 - t|^{2 beta} in the variables t = y^beta, q = p^beta.
inline double h_beta(double beta, double q, double t) {
  if (beta == 0.0) throw DomainError("h_beta: beta must be nonzero");
  return t / (t + 1.0 - q) * std::pow(std::abs(1.0 - t), 2.0 * beta);
}

/// Zero t0 of the quadratic factor of h_beta'. For beta > 0 and q in (0, 1),
/// h_beta increases on [0, t0] and decreases on [t0, 1]; for beta < 0 and
/// q > 1 it decreases on (1, t0] and increases afterwards.
inline double turning_point(double beta, double q) {
  const double b2 = 2.0 * beta + 1.0;
  if (beta > 0.0) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("turning_point: beta > 0 needs q in (0, 1)");
    const double r = 1.0 - q;
    return (std::sqrt(b2 * b2 * r * r + 8.0 * beta * r) - b2 * r) / (4.0 * beta);
  }
  if (beta < 0.0) {
    if (!(q > 1.0)) throw DomainError("turning_point: beta < 0 needs q > 1");
    const double r = q - 1.0;
    return (std::sqrt(b2 * b2 * r * r - 8.0 * beta * r) - b2 * r) / (-4.0 * beta);
  }
  throw DomainError("turning_point: beta must be nonzero");
}

/// Whether the condition is proved in closed form for f at p: t^beta needs
/// p < p_max(beta), -t^beta (beta < 0) holds for all p, and ln holds for
/// p <= e^{-2} (sqrt(r) ln(1/r) increases exactly on (0, e^{-2})). Custom
/// functions have no closed form.
inline bool assumption_proven(const ScalarFunction& f, double p) {
  if (!(p > 0.0 && p < 1.0)) return false;
  switch (f.kind()) {
    case FunctionKind::Log: return p <= std::exp(-2.0);
    case FunctionKind::SignedPower:
      return f.beta() < 0.0 ? true : p < gamma_threshold(f.beta()).p_max;
    case FunctionKind::Custom: return false;
  }
  return false;
}

struct Violation {
  double x, y, lhs, rhs;
};

struct AssumptionReport {
  std::string function;
  double p = 0.0;
  int grid_size = 0;
  std::size_t pairs_tested = 0;
  /// First violations found (at most max_recorded of them).
  std::vector<Violation> violations;
  std::size_t violation_count = 0;
  /// Grid-certified: no violation among the tested pairs.
  bool certified = false;
  /// Closed-form result (see assumption_proven).
  bool proven_regime = false;
  std::string note;
};

inline std::vector<double> geometric_grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  const double r = std::log(hi / lo);
  for (int k = 0; k < n; ++k) g[static_cast<std::size_t>(k)] = lo * std::exp(r * k / (n - 1));
  g.back() = hi;
  return g;
}

inline AssumptionReport check_assumption(const ScalarFunction& f, double p, int grid_n,
                                         std::size_t max_recorded = 64) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("check_assumption: p must lie in (0, 1)");
  if (grid_n < 100) throw ParameterError("check_assumption: grid_n must be at least 100");
  constexpr double kSlack = 1e-12;
  const std::vector<double> grid = geometric_grid(1e-6, 1.0, grid_n);
  std::vector<double> values(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) values[k] = f(grid[k]);
  const double gap = f(1.0) - f(p);
  const double rhs = std::sqrt(p) * gap;

  AssumptionReport rep;
  rep.function = f.name();
  rep.p = p;
  rep.grid_size = grid_n;
  for (std::size_t i = 0; i < grid.size(); ++i) {      // x
    for (std::size_t j = 0; j < i; ++j) {               // y < x
      const double diff = values[i] - values[j];
      if (!(diff > gap)) continue;
      ++rep.pairs_tested;
      const double lhs = std::sqrt(grid[j] / grid[i]) * diff;
      if (lhs > rhs + kSlack) {
        ++rep.violation_count;
        if (rep.violations.size() < max_recorded) rep.violations.push_back({grid[i], grid[j], lhs, rhs});
      }
    }
  }
  rep.certified = rep.violation_count == 0;
  rep.proven_regime = assumption_proven(f, p);
  rep.note = (rep.certified ? "grid-certified" : std::to_string(rep.violation_count) + " grid violations");
  if (f.kind() == FunctionKind::SignedPower && f.beta() > 0.0 && !rep.proven_regime) {
    rep.note += "; outside proven regime (p_max≈" + short_number(std::round(gamma_threshold(f.beta()).p_max * 1000) / 1000) + ")";
  } else if (f.kind() == FunctionKind::Log && !rep.proven_regime) {
    rep.note += "; outside proven regime (p > e^-2≈0.135)";
  }
  return rep;
}

struct GMonotoneReport {
  std::vector<double> y;
  std::vector<double> g;
  double g_p = 0.0;
  /// sqrt(p) (f(1) - f(p)), which g(p) must reproduce.
  double rhs = 0.0;
  /// g non-decreasing along the grid.
  bool monotone = false;
  /// g(y) <= g(p) at every grid point.
  bool bounded = false;
};

/// g(y) = finv(f(y) + f(1) - f(p))^{-1/2} y^{1/2} (f(1) - f(y)) on a geometric
/// grid of (0, p]. g increasing on (0, p) is sufficient for the condition.
inline GMonotoneReport g_monotone_check(const ScalarFunction& f, double p, int grid_n) {
  if (!f.has_inverse()) throw DomainError("g_monotone_check: " + f.name() + " has no inverse");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("g_monotone_check: p must lie in (0, 1)");
  if (grid_n < 2) throw ParameterError("g_monotone_check: grid_n must be at least 2");
  const double f1 = f(1.0), fp = f(p);
  auto g = [&](double y) {
    const double base = f.inverse(f(y) + f1 - fp);
    if (!(base > 0.0)) throw DomainError("g_monotone_check: inverse argument outside range of f");
    return std::sqrt(y / base) * (f1 - f(y));
  };
  GMonotoneReport rep;
  rep.y = geometric_grid(std::min(1e-6, p / 10.0), p, grid_n);
  rep.g.reserve(rep.y.size());
  for (double y : rep.y) rep.g.push_back(g(y));
  rep.g_p = rep.g.back();
  rep.rhs = std::sqrt(p) * (f1 - fp);
  rep.monotone = true;
  rep.bounded = true;
  for (std::size_t k = 0; k < rep.g.size(); ++k) {
    if (k > 0 && rep.g[k] < rep.g[k - 1]) rep.monotone = false;
    if (rep.g[k] > rep.g_p + 1e-12) rep.bounded = false;
  }
  return rep;
}

}  // namespace entrate

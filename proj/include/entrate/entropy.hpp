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

// Entropy functionals of density operators. Every supported entropy has one of
// two shapes,
//   S(rho) = k1 Tr F(rho) + k2        (trace form: von Neumann, Tsallis)
//   S(rho) = k1 log Tr F(rho) + k2    (log-trace form: Renyi)
// and rates only need k1, the generator F and its derivative F'.

#include <cmath>
#include <functional>
#include <string>
#include <string_view>
#include <utility>

#include "entrate/errors.hpp"
#include "entrate/functions.hpp"
#include "entrate/linalg.hpp"

namespace entrate {

enum class EntropyKind { VonNeumann, Renyi, Tsallis, TraceForm, LogTraceForm };

/// Generator F of a (log-)trace-form entropy together with F'.
struct TraceGenerator {
  std::string name;
  std::function<double(double)> value;
  std::function<double(double)> derivative;
  /// Domain of F' (singular at 0 for ln and negative powers).
  SpectralDomain derivative_domain{0.0, false};
  /// F applied to zero eigenvalues (0 ln 0 = 0, 0^a = 0).
  double zero_value = 0.0;

  /// Generator with F = the antiderivative of f and F' = f.
  static TraceGenerator from_function(const ScalarFunction& f) {
    if (!f.has_antiderivative()) throw DomainError(f.name() + ": trace form needs an antiderivative");
    return {f.name(), [f](double x) { return f.antiderivative(x); }, [f](double x) { return f(x); },
            f.spectral_domain(), 0.0};
  }
};

/// Induced commutator function: F'(x) = scale f(x) + const with f increasing.
struct InducedFunction {
  double scale;
  ScalarFunction f;
};

class EntropySpec {
 public:
  static EntropySpec von_neumann() {
    return EntropySpec(EntropyKind::VonNeumann, 0.0, -1.0, 0.0,
                       {"xlogx", [](double x) { return x > 0.0 ? x * std::log(x) : 0.0; },
                        [](double x) { return std::log(x) + 1.0; }, {0.0, true}, 0.0},
                       false);
  }

  /// S_alpha = log(Tr rho^alpha) / (1 - alpha), alpha > 0, alpha != 1.
  static EntropySpec renyi(double alpha) {
    check_order(alpha, "renyi");
    return EntropySpec(EntropyKind::Renyi, alpha, 1.0 / (1.0 - alpha), 0.0, power_generator(alpha), true);
  }

  /// S_q = (1 - Tr rho^q) / (q - 1), q > 0, q != 1.
  static EntropySpec tsallis(double q) {
    check_order(q, "tsallis");
    return EntropySpec(EntropyKind::Tsallis, q, -1.0 / (q - 1.0), 1.0 / (q - 1.0), power_generator(q), false);
  }

  static EntropySpec trace_form(double k1, double k2, TraceGenerator g) {
    return EntropySpec(EntropyKind::TraceForm, 0.0, k1, k2, std::move(g), false);
  }

  static EntropySpec log_trace_form(double k1, double k2, TraceGenerator g) {
    return EntropySpec(EntropyKind::LogTraceForm, 0.0, k1, k2, std::move(g), true);
  }

  EntropyKind kind() const { return kind_; }
  /// Order alpha (Renyi) or q (Tsallis); 0 otherwise.
  double order() const { return order_; }
  double k1() const { return k1_; }
  double k2() const { return k2_; }
  bool log_form() const { return log_form_; }
  const TraceGenerator& generator() const { return generator_; }

  std::string name() const {
    switch (kind_) {
      case EntropyKind::VonNeumann: return "vn";
      case EntropyKind::Renyi: return "renyi:" + short_number(order_);
      case EntropyKind::Tsallis: return "tsallis:" + short_number(order_);
      case EntropyKind::TraceForm: return "trace:" + generator_.name;
      case EntropyKind::LogTraceForm: return "logtrace:" + generator_.name;
    }
    return "?";
  }

  /// Tr F(rho) from a spectrum, with F(0) replaced by zero_value for
  /// eigenvalues <= tol::kZeroEigenvalue (rounding noise around a zero eigenvalue).
  double trace_generator(const RealVector& spectrum) const {
    double acc = 0.0;
    for (Eigen::Index k = 0; k < spectrum.size(); ++k) {
      const double lambda = spectrum(k);
      acc += lambda > tol::kZeroEigenvalue ? generator_.value(lambda) : generator_.zero_value;
    }
    return acc;
  }

  /// F'(Y) as an operator.
  HermitianOperator derivative_operator(const HermitianOperator& y) const {
    return apply_spectral(y, generator_.derivative, generator_.derivative_domain);
  }

  /// (scale, f) with F' = scale f + const and f monotonically increasing.
  /// TraceForm/LogTraceForm specs report their F' directly as f when it is
  /// increasing and -F' otherwise.
  InducedFunction induced_function() const {
    switch (kind_) {
      case EntropyKind::VonNeumann: return {1.0, ScalarFunction::log()};
      case EntropyKind::Renyi:
      case EntropyKind::Tsallis: {
        const double beta = order_ - 1.0;
        return {order_ * (beta > 0.0 ? 1.0 : -1.0), ScalarFunction::signed_power(beta)};
      }
      case EntropyKind::TraceForm:
      case EntropyKind::LogTraceForm: break;
    }
    const auto d = generator_.derivative;
    const Interval dom{generator_.derivative_domain.lower, std::numeric_limits<double>::infinity(),
                       generator_.derivative_domain.lower_open};
    const double lo = dom.lower_open ? dom.lower + 1e-3 : dom.lower;
    const double s = d(1.0) >= d(lo) ? 1.0 : -1.0;
    const auto v = generator_.value;
    return {s, ScalarFunction::custom(
                   generator_.name, [d, s](double x) { return s * d(x); },
                   [v, s, z = generator_.zero_value](double x) { return s * (v(x) - z); }, std::nullopt, dom)};
  }

 private:
  EntropySpec(EntropyKind kind, double order, double k1, double k2, TraceGenerator g, bool log_form)
      : kind_(kind), order_(order), k1_(k1), k2_(k2), generator_(std::move(g)), log_form_(log_form) {}

  static void check_order(double a, const char* what) {
    if (!(a > 0.0) || a == 1.0 || !std::isfinite(a)) {
      throw DomainError(std::string(what) + ": order must be positive, finite and different from 1");
    }
  }

  static TraceGenerator power_generator(double a) {
    return {"x^" + short_number(a), [a](double x) { return std::pow(x, a); },
            [a](double x) { return a * std::pow(x, a - 1.0); }, {0.0, a < 1.0}, 0.0};
  }

  EntropyKind kind_;
  double order_;
  double k1_;
  double k2_;
  TraceGenerator generator_;
  bool log_form_;
};

/// Entropy of a spectrum (eigenvalues of a density operator).
inline double entropy_of_spectrum(const RealVector& spectrum, const EntropySpec& spec) {
  const double tr = spec.trace_generator(spectrum);
  if (spec.log_form()) {
    if (!(tr > 0.0)) throw DomainError(spec.name() + ": Tr F(rho) must be positive");
    return spec.k1() * std::log(tr) + spec.k2();
  }
  return spec.k1() * tr + spec.k2();
}

inline double entropy_eval(const DensityOperator& rho, const EntropySpec& spec) {
  return entropy_of_spectrum(eigenvalues_desc(rho.op()), spec);
}

/// -p ln p - (1-p) ln(1-p) on the open interval (0, 1).
inline double binary_entropy(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("binary_entropy: p must lie in (0, 1)");
  return -p * std::log(p) - (1.0 - p) * std::log1p(-p);
}

/// Distances of Renyi and Tsallis entropies at orders 1 -+ eps from the von
/// Neumann entropy.
struct LimitReport {
  double von_neumann = 0.0;
  double renyi_below = 0.0;
  double renyi_above = 0.0;
  double tsallis_below = 0.0;
  double tsallis_above = 0.0;

  double renyi_deviation() const { return std::max(renyi_below, renyi_above); }
  double tsallis_deviation() const { return std::max(tsallis_below, tsallis_above); }
};

inline LimitReport limit_consistency(const DensityOperator& rho, double eps) {
  if (!(eps > 0.0 && eps <= 1e-3)) throw ParameterError("limit_consistency: need 0 < eps <= 1e-3");
  const RealVector spectrum = eigenvalues_desc(rho.op());
  LimitReport r;
  r.von_neumann = entropy_of_spectrum(spectrum, EntropySpec::von_neumann());
  auto dev = [&](const EntropySpec& s) { return std::abs(entropy_of_spectrum(spectrum, s) - r.von_neumann); };
  r.renyi_below = dev(EntropySpec::renyi(1.0 - eps));
  r.renyi_above = dev(EntropySpec::renyi(1.0 + eps));
  r.tsallis_below = dev(EntropySpec::tsallis(1.0 - eps));
  r.tsallis_above = dev(EntropySpec::tsallis(1.0 + eps));
  return r;
}

/// Parses `vn`, `renyi:<alpha>` or `tsallis:<q>`.
inline EntropySpec parse_spec(std::string_view text) {
  if (text == "vn" || text == "von-neumann") return EntropySpec::von_neumann();
  auto param = [&](std::string_view prefix) {
    const std::string num(text.substr(prefix.size()));
    char* end = nullptr;
    const double v = std::strtod(num.c_str(), &end);
    if (num.empty() || end != num.c_str() + num.size()) {
      throw ParameterError("invalid entropy parameter in '" + std::string(text) + "'");
    }
    return v;
  };
  if (text.substr(0, 6) == "renyi:") return EntropySpec::renyi(param("renyi:"));
  if (text.substr(0, 8) == "tsallis:") return EntropySpec::tsallis(param("tsallis:"));
  throw ParameterError("unknown entropy '" + std::string(text) + "' (expected vn, renyi:<a>, tsallis:<q>)");
}

}  // namespace entrate

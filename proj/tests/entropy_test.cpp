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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "support.hpp"

namespace entrate {
namespace {

std::vector<EntropySpec> all_specs() {
  return {EntropySpec::von_neumann(), EntropySpec::renyi(0.5), EntropySpec::renyi(2.0), EntropySpec::renyi(3.5),
          EntropySpec::tsallis(0.5),  EntropySpec::tsallis(2.0), EntropySpec::tsallis(1.5)};
}

TEST(EntropyEval, PureStateHasZeroEntropy) {
  const DensityOperator pure = DensityOperator::pure(testing::ket({0.6, Complex(0.0, 0.8)}));
  for (const EntropySpec& s : all_specs()) EXPECT_NEAR(entropy_eval(pure, s), 0.0, 1e-12) << s.name();
}

TEST(EntropyEval, FlatSpectrumGivesLogDimension) {
  for (int d : {2, 3, 7}) {
    const DensityOperator mm = DensityOperator::maximally_mixed(d);
    EXPECT_NEAR(entropy_eval(mm, EntropySpec::von_neumann()), std::log(d), 1e-12);
    for (double a : {0.3, 0.5, 2.0, 4.0}) EXPECT_NEAR(entropy_eval(mm, EntropySpec::renyi(a)), std::log(d), 1e-12);
  }
}

TEST(EntropyEval, TsallisTwoOnQubit) {
  EXPECT_NEAR(entropy_eval(DensityOperator::maximally_mixed(2), EntropySpec::tsallis(2.0)), 0.5, 1e-15);
}

TEST(EntropyEval, TsallisFlatClosedForm) {
  for (int d : {2, 3, 5, 8}) {
    for (double q : {0.3, 0.5, 1.5, 2.0, 3.0}) {
      const double expected = (1.0 - std::pow(d, 1.0 - q)) / (q - 1.0);
      EXPECT_NEAR(entropy_eval(DensityOperator::maximally_mixed(d), EntropySpec::tsallis(q)), expected, 1e-12);
    }
  }
}

TEST(EntropyEval, ZeroEigenvalueConventions) {
  const DensityOperator r(HermitianOperator::diagonal({0.5, 0.5, 0.0}));
  EXPECT_NEAR(entropy_eval(r, EntropySpec::von_neumann()), std::log(2.0), 1e-12);
  EXPECT_NEAR(entropy_eval(r, EntropySpec::renyi(0.5)), std::log(2.0), 1e-12);
  EXPECT_NEAR(entropy_eval(r, EntropySpec::tsallis(0.5)), (1.0 - 2.0 * std::sqrt(0.5)) / (0.5 - 1.0), 1e-12);
}

TEST(EntropyEval, UnitarilyInvariant) {
  Rng rng(41);
  for (const EntropySpec& s : all_specs()) {
    for (int trial = 0; trial < 100; ++trial) {
      const int d = 2 + trial % 5;
      const DensityOperator rho = sample_density(d, 0.0, rng);
      const DensityOperator rotated = conjugate(rho, sample_unitary(d, rng));
      EXPECT_NEAR(entropy_eval(rotated, s), entropy_eval(rho, s), 1e-10) << s.name();
    }
  }
}

TEST(EntropySpec, ParameterDomain) {
  EXPECT_THROW(EntropySpec::renyi(1.0), DomainError);
  EXPECT_THROW(EntropySpec::renyi(0.0), DomainError);
  EXPECT_THROW(EntropySpec::renyi(-2.0), DomainError);
  EXPECT_THROW(EntropySpec::tsallis(1.0), DomainError);
  EXPECT_THROW(EntropySpec::tsallis(-0.5), DomainError);
  EXPECT_NO_THROW(EntropySpec::tsallis(1e-3));
}

TEST(EntropySpec, TraceFormReproducesVonNeumann) {
  const EntropySpec tf = EntropySpec::trace_form(
      -1.0, 0.0,
      {"xlnx", [](double x) { return x * std::log(x); }, [](double x) { return std::log(x) + 1.0; }, {0.0, true}, 0.0});
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityOperator rho = sample_density(2 + trial % 5, 0.0, rng);
    EXPECT_NEAR(entropy_eval(rho, tf), entropy_eval(rho, EntropySpec::von_neumann()), 1e-12);
  }
}

TEST(EntropySpec, LogTraceFormReproducesRenyi) {
  Rng rng(47);
  for (double a : {0.5, 2.0, 3.0}) {
    const EntropySpec ltf = EntropySpec::log_trace_form(
        1.0 / (1.0 - a), 0.0,
        {"x^a", [a](double x) { return std::pow(x, a); }, [a](double x) { return a * std::pow(x, a - 1.0); },
         {0.0, a < 1.0}, 0.0});
    for (int trial = 0; trial < 100; ++trial) {
      const DensityOperator rho = sample_density(2 + trial % 5, 0.0, rng);
      EXPECT_NEAR(entropy_eval(rho, ltf), entropy_eval(rho, EntropySpec::renyi(a)), 1e-12);
    }
  }
}

TEST(EntropySpec, InducedFunctions) {
  const InducedFunction vn = EntropySpec::von_neumann().induced_function();
  EXPECT_EQ(vn.f.kind(), FunctionKind::Log);
  EXPECT_DOUBLE_EQ(vn.scale, 1.0);
  const InducedFunction r = EntropySpec::renyi(0.5).induced_function();
  EXPECT_DOUBLE_EQ(r.f.beta(), -0.5);
  EXPECT_DOUBLE_EQ(r.scale, -0.5);
  const InducedFunction t = EntropySpec::tsallis(2.0).induced_function();
  EXPECT_DOUBLE_EQ(t.f.beta(), 1.0);
  EXPECT_DOUBLE_EQ(t.scale, 2.0);
  // F' = scale * f + const for every spec on a sample of points.
  for (const EntropySpec& s : all_specs()) {
    const InducedFunction ind = s.induced_function();
    const double c = s.generator().derivative(0.5) - ind.scale * ind.f(0.5);
    for (double x : {0.01, 0.2, 0.7, 1.0}) {
      EXPECT_NEAR(s.generator().derivative(x), ind.scale * ind.f(x) + c, 1e-12) << s.name();
    }
  }
}

TEST(EntropySpec, Names) {
  EXPECT_EQ(EntropySpec::von_neumann().name(), "vn");
  EXPECT_EQ(EntropySpec::renyi(0.5).name(), "renyi:0.5");
  EXPECT_EQ(EntropySpec::tsallis(2.0).name(), "tsallis:2");
  EXPECT_EQ(parse_spec("renyi:2.5").order(), 2.5);
  EXPECT_EQ(parse_spec("vn").kind(), EntropyKind::VonNeumann);
  EXPECT_THROW(parse_spec("renyi:"), ParameterError);
  EXPECT_THROW(parse_spec("shannon"), ParameterError);
  EXPECT_THROW(parse_spec("tsallis:1"), DomainError);
}

TEST(BinaryEntropy, Values) {
  EXPECT_NEAR(binary_entropy(0.5), std::log(2.0), 1e-15);
  EXPECT_NEAR(binary_entropy(0.1), 0.325083, 1e-6);
  for (double p : {0.01, 0.2, 0.37, 0.49}) EXPECT_NEAR(binary_entropy(p), binary_entropy(1.0 - p), 1e-15);
  EXPECT_THROW(binary_entropy(0.0), DomainError);
  EXPECT_THROW(binary_entropy(1.0), DomainError);
  EXPECT_THROW(binary_entropy(1.5), DomainError);
}

TEST(LimitConsistency, MaximallyMixedQubit) {
  const LimitReport r = limit_consistency(DensityOperator::maximally_mixed(2), 1e-4);
  EXPECT_LE(r.renyi_deviation(), 1e-3);
  EXPECT_LE(r.tsallis_deviation(), 1e-3);
}

TEST(LimitConsistency, NearlyPureState) {
  const double eps = 1e-4;
  const DensityOperator rho(HermitianOperator::diagonal({1.0 - 2e-3, 1e-3, 1e-3}));
  const LimitReport r = limit_consistency(rho, eps);
  const double bound = 10.0 * eps * std::abs(std::log(1e-3));
  EXPECT_LE(r.renyi_deviation(), bound);
  EXPECT_LE(r.tsallis_deviation(), bound);
}

TEST(LimitConsistency, ScalesLinearly) {
  const DensityOperator rho(HermitianOperator::diagonal({0.7, 0.3}));
  const LimitReport r = limit_consistency(rho, 1e-5);
  EXPECT_LE(r.renyi_deviation(), 1e-4);
  EXPECT_LE(r.tsallis_deviation(), 1e-4);
  const LimitReport r2 = limit_consistency(rho, 1e-4);
  EXPECT_NEAR(r2.renyi_deviation() / r.renyi_deviation(), 10.0, 0.1);
  EXPECT_THROW(limit_consistency(rho, 0.0), ParameterError);
  EXPECT_THROW(limit_consistency(rho, 1e-2), ParameterError);
}

}  // namespace
}  // namespace entrate

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

#include <vector>

#include "support.hpp"

namespace entrate {
namespace {

using testing::max_abs;

TEST(HermitianOperator, RejectsNonHermitianAndNonSquare) {
  Matrix m(2, 2);
  m << 1.0, 2.0, 0.0, 1.0;
  EXPECT_THROW(HermitianOperator{m}, InvariantError);
  EXPECT_THROW(HermitianOperator{Matrix::Zero(2, 3)}, LayoutError);
  Matrix near = Matrix::Identity(2, 2);
  near(0, 1) = 1e-13;
  EXPECT_NO_THROW(HermitianOperator{near});
}

TEST(DensityOperator, ValidatesTraceAndPositivity) {
  EXPECT_THROW(DensityOperator(HermitianOperator::diagonal({0.6, 0.6})), InvariantError);
  EXPECT_THROW(DensityOperator(HermitianOperator::diagonal({1.1, -0.1})), InvariantError);
  EXPECT_NO_THROW(DensityOperator(HermitianOperator::diagonal({1.0, 0.0})));
  EXPECT_NEAR(DensityOperator::maximally_mixed(3).op().trace(), 1.0, 1e-15);
}

TEST(StateVector, ValidatesNormAndLayout) {
  Vector v = Vector::Zero(4);
  v(0) = 1.0;
  EXPECT_NO_THROW(StateVector(v, {2, 2}));
  EXPECT_THROW(StateVector(v, {2, 3}), LayoutError);
  EXPECT_THROW(StateVector(2.0 * v, {2, 2}), InvariantError);
  EXPECT_THROW(StateVector(v, {}), LayoutError);
}

TEST(Spectral, DescendingAndReconstructs) {
  Rng rng(3);
  for (int d = 1; d <= 8; ++d) {
    const HermitianOperator a = sample_hermitian(d, rng);
    const SpectralDecomposition sd = spectral(a);
    for (int k = 1; k < d; ++k) EXPECT_GE(sd.eigenvalues(k - 1), sd.eigenvalues(k));
    EXPECT_LE(max_abs(sd.reconstruct() - a.matrix()), 1e-10);
    EXPECT_LE(max_abs(sd.eigenvectors.adjoint() * sd.eigenvectors - Matrix::Identity(d, d)), 1e-10);
  }
}

TEST(MatrixFunction, DiagonalLog) {
  const HermitianOperator r = matrix_function(HermitianOperator::diagonal({0.9, 0.1}), ScalarFunction::log());
  EXPECT_NEAR(r.matrix()(0, 0).real(), std::log(0.9), 1e-14);
  EXPECT_NEAR(r.matrix()(1, 1).real(), std::log(0.1), 1e-14);
  EXPECT_NEAR(std::abs(r.matrix()(0, 1)), 0.0, 1e-15);
}

TEST(MatrixFunction, SquareOfMaximallyMixed) {
  const HermitianOperator r =
      matrix_function(DensityOperator::maximally_mixed(2).op(), ScalarFunction::signed_power(2.0));
  EXPECT_LE(max_abs(r.matrix() - 0.25 * Matrix::Identity(2, 2)), 1e-15);
}

TEST(MatrixFunction, SquareMatchesDirectProduct) {
  Matrix y(2, 2);
  y << 0.5, 0.25, 0.25, 0.5;
  Matrix expected(2, 2);
  expected << 0.3125, 0.25, 0.25, 0.3125;
  const HermitianOperator r = matrix_function(HermitianOperator(y), ScalarFunction::signed_power(2.0));
  EXPECT_LE(max_abs(r.matrix() - expected), 1e-14);
  EXPECT_LE(max_abs(r.matrix() - y * y), 1e-14);
}

TEST(MatrixFunction, PowerSeriesOracle) {
  // t^2 and t^3 against repeated multiplication on random PSD inputs.
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 6;
    const Matrix y = sample_density(d, 0.0, rng).matrix();
    const HermitianOperator h(y);
    EXPECT_LE(max_abs(matrix_function(h, ScalarFunction::signed_power(2.0)).matrix() - y * y), 1e-10);
    EXPECT_LE(max_abs(matrix_function(h, ScalarFunction::signed_power(3.0)).matrix() - y * y * y), 1e-10);
  }
  // exp through ln: exp(ln Y) = Y via a truncated Taylor series of exp.
  const Matrix y = sample_density(4, 1e-2, rng).matrix();
  const Matrix l = matrix_function(HermitianOperator(y), ScalarFunction::log()).matrix();
  Matrix term = Matrix::Identity(4, 4), sum = Matrix::Identity(4, 4);
  for (int k = 1; k < 80; ++k) {
    term = term * l / static_cast<double>(k);
    sum += term;
  }
  EXPECT_LE(max_abs(sum - y), 1e-10);
}

TEST(MatrixFunction, SingularInputRaisesDomainError) {
  const HermitianOperator y = HermitianOperator::diagonal({1.0, 0.0});
  EXPECT_THROW(matrix_function(y, ScalarFunction::log()), DomainError);
  EXPECT_THROW(matrix_function(y, ScalarFunction::signed_power(-0.5)), DomainError);
  EXPECT_THROW(matrix_function(HermitianOperator::diagonal({1.0, 1e-13}), ScalarFunction::log()), DomainError);
  EXPECT_NO_THROW(matrix_function(y, ScalarFunction::signed_power(0.5)));
  EXPECT_THROW(matrix_function(HermitianOperator::diagonal({1.0, -0.1}), ScalarFunction::signed_power(0.5)),
               DomainError);
}

TEST(TraceNorm, Examples) {
  EXPECT_NEAR(trace_norm(HermitianOperator::diagonal({1.0, -2.0}).matrix()), 3.0, 1e-14);
  EXPECT_EQ(trace_norm(Matrix::Zero(3, 3)), 0.0);
  const double c = 0.05 * std::log(9.0);
  Matrix a(2, 2);
  a << 0.0, c, -c, 0.0;
  EXPECT_NEAR(trace_norm(a), 0.1 * std::log(9.0), 1e-14);
  EXPECT_NEAR(trace_norm(a), 0.2197, 1e-4);
  EXPECT_THROW(trace_norm(Matrix::Zero(2, 3)), LayoutError);
}

TEST(CommutatorWitness, CommutingDiagonals) {
  const CommutatorWitness w =
      commutator_witness(HermitianOperator::diagonal({0.3, 0.1}), HermitianOperator::diagonal({2.0, -1.0}));
  EXPECT_NEAR(w.value, 0.0, 1e-15);
  EXPECT_LE(max_abs(w.h_opt.matrix() - Matrix::Identity(2, 2)), 1e-15);
}

TEST(CommutatorWitness, GoldenCase) {
  const Ensemble2 e = testing::golden_ensemble();
  const CommutatorWitness w = commutator_witness(e.x(), matrix_function(e.y(), ScalarFunction::log()));
  EXPECT_NEAR(w.value, 0.1 * std::log(9.0), 1e-12);
  EXPECT_NEAR(w.value, 0.21972, 1e-5);
}

TEST(CommutatorWitness, AgreesWithSingularValuesAndIsOptimal) {
  Rng rng(5);
  const Complex i_unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + trial % 5;
    const HermitianOperator x = sample_hermitian(d, rng);
    const HermitianOperator g = sample_hermitian(d, rng);
    const Matrix c = commutator(x.matrix(), g.matrix());
    const CommutatorWitness w = commutator_witness(x, g);
    EXPECT_NEAR(w.value, trace_norm(c), 1e-10);
    const Matrix z = i_unit * c;
    EXPECT_LE(max_hermitian_deviation(z), 1e-12);
    EXPECT_NEAR(z.trace().real(), 0.0, 1e-12);
    EXPECT_NEAR((w.h_opt.matrix() * z).trace().real(), w.value, 1e-10);
    EXPECT_NEAR(operator_norm(w.h_opt), 1.0, 1e-12);
    if (trial < 20) {
      const double best = (w.h_opt.matrix() * z).trace().real();
      for (int k = 0; k < 100; ++k) {
        const HermitianOperator h = normalize_operator_norm(sample_hermitian(d, rng));
        EXPECT_LE((h.matrix() * z).trace().real(), best + 1e-10);
      }
    }
  }
  EXPECT_THROW(commutator_witness(HermitianOperator::identity(2), HermitianOperator::identity(3)), LayoutError);
}

TEST(Kron, MatchesDefinition) {
  Matrix a(2, 2), b(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  b << 0.0, 1.0, 1.0, 0.0;
  const Matrix k = kron(a, b);
  EXPECT_EQ(k.rows(), 4);
  EXPECT_EQ(k(0, 1), Complex(1.0));
  EXPECT_EQ(k(2, 3), Complex(4.0));
  EXPECT_EQ(k(3, 0), Complex(3.0));
  EXPECT_EQ(k(1, 2), Complex(2.0));
}

TEST(PartialTrace, ProductState) {
  Rng rng(17);
  const DensityOperator ra = sample_density(2, 0.0, rng);
  const DensityOperator rb = sample_density(3, 0.0, rng);
  const DensityOperator rho(kron(ra.op(), rb.op()));
  EXPECT_LE(max_abs(partial_trace(rho, {2, 3}, {0}).matrix() - ra.matrix()), 1e-12);
  EXPECT_LE(max_abs(partial_trace(rho, {2, 3}, {1}).matrix() - rb.matrix()), 1e-12);
}

TEST(PartialTrace, MaximallyEntangled) {
  const double s = 1.0 / std::sqrt(2.0);
  const DensityOperator bell = DensityOperator::pure(testing::ket({s, 0.0, 0.0, s}));
  EXPECT_LE(max_abs(partial_trace(bell, {2, 2}, {0}).matrix() - 0.5 * Matrix::Identity(2, 2)), 1e-15);
}

TEST(PartialTrace, BruteForceContraction) {
  // Naive loop over the three-party index digits.
  Rng rng(19);
  const Layout layout{2, 3, 2};
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator rho = sample_density(12, 0.0, rng);
    for (const std::vector<int>& keep : {std::vector<int>{0}, {1}, {2}, {0, 2}, {1, 2}, {0, 1}}) {
      const DensityOperator r = partial_trace(rho, layout, keep);
      auto kept = [&](int a, int b, int c) {
        int idx = 0;
        const int digits[3] = {a, b, c};
        for (int k : keep) idx = idx * layout[static_cast<std::size_t>(k)] + digits[k];
        return idx;
      };
      Matrix naive = Matrix::Zero(r.dim(), r.dim());
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 3; ++b)
          for (int c = 0; c < 2; ++c)
            for (int a2 = 0; a2 < 2; ++a2)
              for (int b2 = 0; b2 < 3; ++b2)
                for (int c2 = 0; c2 < 2; ++c2) {
                  bool traced_equal = true;
                  const int d1[3] = {a, b, c}, d2[3] = {a2, b2, c2};
                  for (int k = 0; k < 3; ++k) {
                    if (std::find(keep.begin(), keep.end(), k) == keep.end() && d1[k] != d2[k]) traced_equal = false;
                  }
                  if (!traced_equal) continue;
                  naive(kept(a, b, c), kept(a2, b2, c2)) += rho.matrix()((a * 3 + b) * 2 + c, (a2 * 3 + b2) * 2 + c2);
                }
      EXPECT_LE(max_abs(r.matrix() - naive), 1e-12);
      EXPECT_NEAR((r.matrix() * r.matrix()).trace().real(), (naive * naive).trace().real(), 1e-12);
      EXPECT_NEAR(r.op().trace(), 1.0, 1e-12);
      EXPECT_GE(min_eigenvalue(r.op()), -1e-12);
    }
  }
}

TEST(PartialTrace, ReducedStateOfPureAgreesWithDensityRoute) {
  Rng rng(23);
  const StateVector psi = sample_pure_state({2, 3, 2, 2}, rng);
  const DensityOperator full = DensityOperator::pure(psi.amplitudes());
  EXPECT_LE(max_abs(reduced_state(psi, {0, 1}).matrix() - partial_trace(full, psi.layout(), {0, 1}).matrix()),
            1e-12);
  EXPECT_LE(max_abs(reduced_state(psi, {0, 1, 2}).matrix() - partial_trace(full, psi.layout(), {0, 1, 2}).matrix()),
            1e-12);
}

TEST(PartialTrace, LayoutErrors) {
  const DensityOperator rho = DensityOperator::maximally_mixed(4);
  EXPECT_THROW(partial_trace(rho, {2, 3}, {0}), LayoutError);
  EXPECT_THROW(partial_trace(rho, {2, 2}, {2}), LayoutError);
  EXPECT_THROW(partial_trace(rho, {2, 2}, {0, 0}), LayoutError);
  EXPECT_THROW(partial_trace(rho, {}, {0}), LayoutError);
}

TEST(SampleDensity, DeterministicInSeed) {
  EXPECT_EQ(sample_density(4, 0.0, std::uint64_t{42}).matrix(), sample_density(4, 0.0, std::uint64_t{42}).matrix());
  EXPECT_NE(sample_density(4, 0.0, std::uint64_t{42}).matrix(), sample_density(4, 0.0, std::uint64_t{43}).matrix());
}

TEST(SampleDensity, SpectralFloor) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_GE(min_eigenvalue(sample_density(4, 1e-3, seed).op()), 1e-3 - 1e-15);
  }
  EXPECT_THROW(sample_density(4, 0.25, std::uint64_t{1}), ParameterError);
  EXPECT_THROW(sample_density(4, -0.1, std::uint64_t{1}), ParameterError);
}

TEST(SampleDensity, MeanIsMaximallyMixed) {
  Matrix mean = Matrix::Zero(2, 2);
  constexpr int kSeeds = 10000;
  for (int s = 0; s < kSeeds; ++s) mean += sample_density(2, 0.0, static_cast<std::uint64_t>(s)).matrix();
  mean /= kSeeds;
  EXPECT_LE(max_abs(mean - 0.5 * Matrix::Identity(2, 2)), 0.02);
}

TEST(SamplePureState, DeterministicAndNormalized) {
  const StateVector a = sample_pure_state({2, 3}, std::uint64_t{7});
  const StateVector b = sample_pure_state({2, 3}, std::uint64_t{7});
  EXPECT_EQ(a.amplitudes(), b.amplitudes());
  EXPECT_NEAR(a.amplitudes().squaredNorm(), 1.0, 1e-12);
  EXPECT_THROW(sample_pure_state({}, std::uint64_t{7}), LayoutError);
}

TEST(SamplePureState, HaarPurity) {
  // E Tr(rho_A^2) = (d_A + d_B) / (d_A d_B + 1) = 4/5 for two qubits.
  double acc = 0.0;
  constexpr int kSeeds = 10000;
  for (int s = 0; s < kSeeds; ++s) {
    const DensityOperator r = reduced_state(sample_pure_state({2, 2}, static_cast<std::uint64_t>(s)), {0});
    acc += (r.matrix() * r.matrix()).trace().real();
  }
  EXPECT_NEAR(acc / kSeeds, 0.8, 0.01);
}

TEST(SampleUnitary, IsUnitary) {
  Rng rng(29);
  for (int d = 1; d <= 6; ++d) {
    const Matrix u = sample_unitary(d, rng);
    EXPECT_LE(max_abs(u.adjoint() * u - Matrix::Identity(d, d)), 1e-12);
  }
}

TEST(Propagator, UnitaryAndGroupLaw) {
  Rng rng(31);
  const HermitianOperator h = sample_hermitian(4, rng);
  const Matrix u = propagator(h, 0.3);
  EXPECT_LE(max_abs(u.adjoint() * u - Matrix::Identity(4, 4)), 1e-12);
  EXPECT_LE(max_abs(propagator(h, 0.1) * propagator(h, 0.2) - u), 1e-12);
  EXPECT_LE(max_abs(propagator(h, 0.0) - Matrix::Identity(4, 4)), 1e-14);
}

TEST(StreamSeed, DistinctStreams) {
  EXPECT_NE(stream_seed(42, 0), stream_seed(42, 1));
  EXPECT_NE(stream_seed(42, 0), stream_seed(43, 0));
  EXPECT_EQ(stream_seed(42, 5), stream_seed(42, 5));
}

}  // namespace
}  // namespace entrate

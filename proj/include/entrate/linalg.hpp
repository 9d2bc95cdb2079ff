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

// Dense Hermitian linear algebra on small complex matrices: validated operator
// types, spectral functions, trace norms and commutator witnesses, partial
// traces over tensor layouts, and seeded random sampling.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entrate/errors.hpp"

namespace entrate {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Ordered subsystem dimensions of a tensor-product space.
using Layout = std::vector<int>;

namespace tol {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kPositivity = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kNorm = 1e-12;
inline constexpr double kReconstruction = 1e-10;
/// Eigenvalues below this are outside the domain of ln and negative powers.
inline constexpr double kDomainFloor = 1e-12;
/// |lambda| at or below this counts as non-negative when building projectors.
inline constexpr double kZeroEigenvalue = 1e-12;
}  // namespace tol

/// Largest total Hilbert-space dimension the scan harness accepts by default.
inline constexpr int kDefaultDimCap = 64;

inline int layout_dim(const Layout& layout) {
  return std::accumulate(layout.begin(), layout.end(), 1,
                         [](int acc, int d) { return acc * d; });
}

inline double max_hermitian_deviation(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

class HermitianOperator {
 public:
  HermitianOperator() = default;

  /// Validates that `m` is square and Hermitian within tol::kHermitian.
  explicit HermitianOperator(Matrix m) {
    if (m.rows() != m.cols()) throw LayoutError("HermitianOperator: matrix is not square");
    if (m.rows() == 0) throw LayoutError("HermitianOperator: empty matrix");
    const double dev = max_hermitian_deviation(m);
    if (!(dev <= tol::kHermitian)) {
      throw InvariantError("HermitianOperator: deviation from adjoint " + std::to_string(dev));
    }
    m_ = 0.5 * (m + m.adjoint()).eval();
  }

  /// Hermitian part of a matrix known to be Hermitian up to rounding; no check.
  static HermitianOperator hermitian_part(const Matrix& m) {
    if (m.rows() != m.cols()) throw LayoutError("hermitian_part: matrix is not square");
    HermitianOperator h;
    h.m_ = 0.5 * (m + m.adjoint());
    return h;
  }

  static HermitianOperator identity(int dim) {
    return hermitian_part(Matrix::Identity(dim, dim));
  }

  static HermitianOperator diagonal(const RealVector& diag) {
    return hermitian_part(diag.cast<Complex>().asDiagonal().toDenseMatrix());
  }

  static HermitianOperator diagonal(std::initializer_list<double> diag) {
    RealVector v(static_cast<Eigen::Index>(diag.size()));
    Eigen::Index i = 0;
    for (double d : diag) v(i++) = d;
    return diagonal(v);
  }

  /// Projector |v><v| onto a (not necessarily normalized) vector.
  static HermitianOperator outer(const Vector& v) { return hermitian_part(v * v.adjoint()); }

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

  friend HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
    check_same_dim(a, b);
    return hermitian_part(a.m_ + b.m_);
  }
  friend HermitianOperator operator-(const HermitianOperator& a, const HermitianOperator& b) {
    check_same_dim(a, b);
    return hermitian_part(a.m_ - b.m_);
  }
  friend HermitianOperator operator*(double s, const HermitianOperator& a) {
    return hermitian_part(s * a.m_);
  }

 private:
  static void check_same_dim(const HermitianOperator& a, const HermitianOperator& b) {
    if (a.dim() != b.dim()) throw LayoutError("HermitianOperator: dimension mismatch");
  }

  Matrix m_;
};

/// Eigenvalues in non-increasing order with matching eigenvector columns.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Matrix reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
  }
};

inline SpectralDecomposition spectral(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) throw Error("spectral: eigensolver did not converge");
  const Eigen::Index n = a.dim();
  SpectralDecomposition out{RealVector(n), Matrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = solver.eigenvalues()(n - 1 - k);
    out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

inline RealVector eigenvalues_desc(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigenvalues: eigensolver did not converge");
  return solver.eigenvalues().reverse();
}

inline double min_eigenvalue(const HermitianOperator& a) { return eigenvalues_desc(a).minCoeff(); }

inline double operator_norm(const HermitianOperator& a) {
  return eigenvalues_desc(a).cwiseAbs().maxCoeff();
}

class DensityOperator {
 public:
  DensityOperator() = default;

  /// Validates positivity (eigenvalues >= -psd_tol) and unit trace.
  explicit DensityOperator(HermitianOperator op, double psd_tol = tol::kPositivity)
      : op_(std::move(op)) {
    const double tr = op_.trace();
    if (!(std::abs(tr - 1.0) <= tol::kTrace)) {
      throw InvariantError("DensityOperator: trace " + std::to_string(tr) + " differs from 1");
    }
    const double lo = min_eigenvalue(op_);
    if (!(lo >= -psd_tol)) {
      throw InvariantError("DensityOperator: negative eigenvalue " + std::to_string(lo));
    }
  }

  static DensityOperator maximally_mixed(int dim) {
    return DensityOperator((1.0 / dim) * HermitianOperator::identity(dim));
  }

  /// Pure state |v><v| for a unit vector v.
  static DensityOperator pure(const Vector& v) { return DensityOperator(HermitianOperator::outer(v)); }

  int dim() const { return op_.dim(); }
  const HermitianOperator& op() const { return op_; }
  const Matrix& matrix() const { return op_.matrix(); }

 private:
  HermitianOperator op_;
};

/// Unit vector on a tensor-product space with the given subsystem layout.
class StateVector {
 public:
  StateVector() = default;

  StateVector(Vector amplitudes, Layout layout)
      : amplitudes_(std::move(amplitudes)), layout_(std::move(layout)) {
    if (layout_.empty()) throw LayoutError("StateVector: empty layout");
    for (int d : layout_) {
      if (d < 1) throw LayoutError("StateVector: non-positive subsystem dimension");
    }
    if (layout_dim(layout_) != amplitudes_.size()) {
      throw LayoutError("StateVector: layout product differs from vector size");
    }
    const double n2 = amplitudes_.squaredNorm();
    if (!(std::abs(n2 - 1.0) <= tol::kNorm)) {
      throw InvariantError("StateVector: squared norm " + std::to_string(n2));
    }
  }

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  const Layout& layout() const { return layout_; }

 private:
  Vector amplitudes_;
  Layout layout_;
};

/// Lower end of a spectral function's domain.
struct SpectralDomain {
  double lower = -std::numeric_limits<double>::infinity();
  /// Open ends (ln, negative powers at 0) require eigenvalues >= lower + kDomainFloor.
  bool lower_open = false;
};

/// U fn(D) U^dagger for the spectral decomposition of `y`.
template <class Fn>
HermitianOperator apply_spectral(const HermitianOperator& y, Fn&& fn, SpectralDomain domain = {}) {
  SpectralDecomposition sd = spectral(y);
  RealVector values(sd.eigenvalues.size());
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    double lambda = sd.eigenvalues(k);
    if (domain.lower_open) {
      if (!(lambda >= domain.lower + tol::kDomainFloor)) {
        throw DomainError("matrix function: eigenvalue " + std::to_string(lambda) +
                          " at or below singular point " + std::to_string(domain.lower));
      }
    } else if (std::isfinite(domain.lower)) {
      if (!(lambda >= domain.lower - tol::kPositivity)) {
        throw DomainError("matrix function: eigenvalue " + std::to_string(lambda) +
                          " outside domain");
      }
      lambda = std::max(lambda, domain.lower);
    }
    values(k) = fn(lambda);
    if (!std::isfinite(values(k))) {
      throw DomainError("matrix function: non-finite value at eigenvalue " + std::to_string(lambda));
    }
  }
  sd.eigenvalues = values;
  return HermitianOperator::hermitian_part(sd.reconstruct());
}

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Sum of singular values.
inline double trace_norm(const Matrix& a) {
  if (a.rows() != a.cols()) throw LayoutError("trace_norm: matrix is not square");
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues().sum();
}

struct CommutatorWitness {
  /// ||[X, G]||_1.
  double value = 0.0;
  /// I - 2R with R the projector on the strictly negative eigenspace of i[X, G].
  HermitianOperator h_opt;
};

inline CommutatorWitness commutator_witness(const HermitianOperator& x, const HermitianOperator& g) {
  if (x.dim() != g.dim()) throw LayoutError("commutator_witness: dimension mismatch");
  const Complex i_unit(0.0, 1.0);
  const HermitianOperator z = HermitianOperator::hermitian_part(i_unit * commutator(x.matrix(), g.matrix()));
  const SpectralDecomposition sd = spectral(z);
  const int n = x.dim();
  Matrix projector = Matrix::Zero(n, n);
  double value = 0.0;
  for (int k = 0; k < n; ++k) {
    const double lambda = sd.eigenvalues(k);
    value += std::abs(lambda);
    if (lambda < -tol::kZeroEigenvalue) {
      projector += sd.eigenvectors.col(k) * sd.eigenvectors.col(k).adjoint();
    }
  }
  Matrix h = Matrix::Identity(n, n) - 2.0 * projector;
  return {value, HermitianOperator::hermitian_part(h)};
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator::hermitian_part(kron(a.matrix(), b.matrix()));
}

/// I_left (x) op (x) I_right.
inline HermitianOperator embed(const HermitianOperator& op, int left_dim, int right_dim) {
  Matrix m = kron(kron(Matrix::Identity(left_dim, left_dim), op.matrix()),
                  Matrix::Identity(right_dim, right_dim));
  return HermitianOperator::hermitian_part(m);
}

namespace detail {

// Splits the full index space into kept and traced multi-indices. full_index
// maps (kept linear index, traced linear index) to the row-major full index
// (first subsystem most significant).
struct IndexSplit {
  int kept_dim = 1;
  int traced_dim = 1;
  Layout kept_layout;
  std::vector<int> full_index;
};

inline IndexSplit split_indices(const Layout& layout, std::span<const int> keep) {
  const int n = static_cast<int>(layout.size());
  std::vector<bool> is_kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw LayoutError("partial trace: subsystem index out of range");
    if (is_kept[k]) throw LayoutError("partial trace: duplicate subsystem index");
    is_kept[k] = true;
  }
  IndexSplit s;
  for (int k = 0; k < n; ++k) {
    if (is_kept[k]) {
      s.kept_dim *= layout[k];
      s.kept_layout.push_back(layout[k]);
    } else {
      s.traced_dim *= layout[k];
    }
  }
  const int total = layout_dim(layout);
  s.full_index.assign(static_cast<std::size_t>(total), 0);
  std::vector<int> digits(n, 0);
  for (int full = 0; full < total; ++full) {
    int rem = full;
    for (int k = n - 1; k >= 0; --k) {
      digits[k] = rem % layout[k];
      rem /= layout[k];
    }
    int kept = 0, traced = 0;
    for (int k = 0; k < n; ++k) {
      if (is_kept[k]) kept = kept * layout[k] + digits[k];
      else traced = traced * layout[k] + digits[k];
    }
    s.full_index[static_cast<std::size_t>(kept) * s.traced_dim + traced] = full;
  }
  return s;
}

inline void check_layout(const Layout& layout, int dim) {
  if (layout.empty()) throw LayoutError("layout is empty");
  for (int d : layout) {
    if (d < 1) throw LayoutError("layout has a non-positive dimension");
  }
  if (layout_dim(layout) != dim) throw LayoutError("layout product differs from operator dimension");
}

}  // namespace detail

/// Reduced operator on the `keep` subsystems (kept in layout order).
inline DensityOperator partial_trace(const DensityOperator& rho, const Layout& layout,
                                     std::span<const int> keep) {
  detail::check_layout(layout, rho.dim());
  const detail::IndexSplit s = detail::split_indices(layout, keep);
  const Matrix& m = rho.matrix();
  Matrix out = Matrix::Zero(s.kept_dim, s.kept_dim);
  for (int i = 0; i < s.kept_dim; ++i) {
    for (int j = 0; j < s.kept_dim; ++j) {
      Complex acc = 0.0;
      for (int t = 0; t < s.traced_dim; ++t) {
        acc += m(s.full_index[static_cast<std::size_t>(i) * s.traced_dim + t],
                 s.full_index[static_cast<std::size_t>(j) * s.traced_dim + t]);
      }
      out(i, j) = acc;
    }
  }
  return DensityOperator(HermitianOperator::hermitian_part(out));
}

inline DensityOperator partial_trace(const DensityOperator& rho, const Layout& layout,
                                     std::initializer_list<int> keep) {
  return partial_trace(rho, layout, std::span<const int>(keep.begin(), keep.size()));
}

/// Reduced state of a pure state on the `keep` subsystems, computed as M M^dagger
/// with M the kept-by-traced reshaping of the amplitudes.
inline DensityOperator reduced_state(const StateVector& psi, std::span<const int> keep) {
  const detail::IndexSplit s = detail::split_indices(psi.layout(), keep);
  Matrix m(s.kept_dim, s.traced_dim);
  for (int i = 0; i < s.kept_dim; ++i) {
    for (int t = 0; t < s.traced_dim; ++t) {
      m(i, t) = psi.amplitudes()(s.full_index[static_cast<std::size_t>(i) * s.traced_dim + t]);
    }
  }
  return DensityOperator(HermitianOperator::hermitian_part(m * m.adjoint()));
}

inline DensityOperator reduced_state(const StateVector& psi, std::initializer_list<int> keep) {
  return reduced_state(psi, std::span<const int>(keep.begin(), keep.size()));
}

// ---------------------------------------------------------------------------
// Random sampling. Every sampler is a pure function of its seed.

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of the independent stream for trial `index` under `master`.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

/// Matrix of independent standard complex Gaussians (E|z|^2 = 1).
inline Matrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

/// G G^dagger / Tr(G G^dagger) mixed with identity so that every eigenvalue is at
/// least `min_eig`. `rank` (0 = full) sets the number of columns of G.
inline DensityOperator sample_density(int dim, double min_eig, Rng& rng, int rank = 0) {
  if (dim < 1) throw ParameterError("sample_density: dimension must be positive");
  if (!(min_eig >= 0.0) || !(min_eig * dim < 1.0)) {
    throw ParameterError("sample_density: need 0 <= min_eig and min_eig * dim < 1");
  }
  if (rank < 0 || rank > dim) throw ParameterError("sample_density: rank out of range");
  const Matrix g = ginibre(dim, rank == 0 ? dim : rank, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (1.0 - dim * min_eig) * rho + min_eig * Matrix::Identity(dim, dim);
  return DensityOperator(HermitianOperator::hermitian_part(rho));
}

inline DensityOperator sample_density(int dim, double min_eig, std::uint64_t seed, int rank = 0) {
  Rng rng(seed);
  return sample_density(dim, min_eig, rng, rank);
}

inline StateVector sample_pure_state(const Layout& layout, Rng& rng) {
  if (layout.empty()) throw LayoutError("sample_pure_state: empty layout");
  const int dim = layout_dim(layout);
  if (dim < 1) throw LayoutError("sample_pure_state: invalid layout");
  Vector v = ginibre(dim, 1, rng).col(0);
  v /= v.norm();
  return StateVector(std::move(v), layout);
}

inline StateVector sample_pure_state(const Layout& layout, std::uint64_t seed) {
  Rng rng(seed);
  return sample_pure_state(layout, rng);
}

/// GUE-distributed Hermitian matrix (G + G^dagger) / 2.
inline HermitianOperator sample_hermitian(int dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  return HermitianOperator::hermitian_part(g);
}

inline HermitianOperator sample_hermitian(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return sample_hermitian(dim, rng);
}

/// Haar-random unitary from the phase-corrected QR factorization of a Ginibre matrix.
inline Matrix sample_unitary(int dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    const double a = std::abs(d);
    if (a > 0.0) q.col(k) *= d / a;
  }
  return q;
}

inline Matrix sample_unitary(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return sample_unitary(dim, rng);
}

/// Rescales `h` to unit operator norm; the zero operator is returned unchanged.
inline HermitianOperator normalize_operator_norm(const HermitianOperator& h) {
  const double n = operator_norm(h);
  if (n == 0.0) return h;
  return (1.0 / n) * h;
}

/// U X U^dagger.
inline HermitianOperator conjugate(const HermitianOperator& x, const Matrix& u) {
  return HermitianOperator::hermitian_part(u * x.matrix() * u.adjoint());
}

inline DensityOperator conjugate(const DensityOperator& rho, const Matrix& u) {
  return DensityOperator(conjugate(rho.op(), u));
}

/// exp(-i H t) through the spectral decomposition of H.
inline Matrix propagator(const HermitianOperator& h, double t) {
  const SpectralDecomposition sd = spectral(h);
  Vector phases(sd.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::exp(Complex(0.0, -sd.eigenvalues(k) * t));
  }
  return sd.eigenvectors * phases.asDiagonal() * sd.eigenvectors.adjoint();
}

}  // namespace entrate

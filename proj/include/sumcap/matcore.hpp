// Dense complex linear algebra, entropies and random states.
//
// Conventions used throughout sumcap:
//  * matrices are Eigen::MatrixXcd; logical layout is row-major (entry (r, c)),
//  * kron(A, B) puts A's indices on the slow (outer) position, so a basis
//    vector |i>|j> of C^a (x) C^b has flat index i * b + j,
//  * every entropy is measured in bits (log base 2).
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace sumcap {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigenvalues in [-kEigenClip, 0) are treated as exact zeros.
inline constexpr double kEigenClip = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kHermitianTolerance = 1e-12;

/// Largest absolute entry.
double max_abs(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTolerance);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block-diagonal matrix of square blocks. Throws on an empty list.
ComplexMatrix direct_sum_mat(std::span<const ComplexMatrix> blocks);

/// Traces out every subsystem not listed in `keep`. The kept subsystems
/// appear in ascending index order.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            std::span<const int> keep);

/// Reorders tensor factors: output factor k is input factor perm[k].
ComplexMatrix permute_subsystems(const ComplexMatrix& m,
                                 std::span<const int> dims,
                                 std::span<const int> perm);

struct Spectrum {
  RealVector values;     // descending
  ComplexMatrix vectors; // column k belongs to values[k]
};

/// Eigen-decomposition of a Hermitian matrix. Throws if `m` is not
/// Hermitian within `tol`.
Spectrum hermitian_spectrum(const ComplexMatrix& m,
                            double tol = kHermitianTolerance);

/// f applied to the eigenvalues of a Hermitian matrix.
template <class F>
ComplexMatrix hermitian_function(const Spectrum& s, F&& f) {
  RealVector mapped(s.values.size());
  for (Eigen::Index i = 0; i < s.values.size(); ++i) mapped[i] = f(s.values[i]);
  return s.vectors * mapped.asDiagonal() * s.vectors.adjoint();
}

// ---------------------------------------------------------------------------

class ProbDist {
 public:
  ProbDist() = default;
  /// Throws unless weights are non-negative and sum to 1 within 1e-12.
  explicit ProbDist(std::vector<double> weights);
  /// Rescales non-negative weights to unit sum.
  static ProbDist normalized(std::vector<double> weights);
  static ProbDist uniform(std::size_t n);

  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

 private:
  std::vector<double> weights_;
};

class PureState {
 public:
  /// Throws unless the vector has unit norm within 1e-12.
  PureState(ComplexVector vec, std::vector<int> dims = {});
  /// Rescales a non-zero vector to unit norm.
  static PureState normalized(const ComplexVector& vec, std::vector<int> dims = {});
  static PureState basis(int d, int index);

  const ComplexVector& vec() const { return vec_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return static_cast<int>(vec_.size()); }
  ComplexMatrix projector() const { return vec_ * vec_.adjoint(); }

 private:
  ComplexVector vec_;
  std::vector<int> dims_;
};

/// Positive semidefinite, unit-trace matrix with an optional subsystem
/// structure. Slightly negative eigenvalues (>= -1e-10) are accepted.
class DensityMatrix {
 public:
  /// Validates Hermiticity, trace and positivity. `dims` defaults to {d}.
  explicit DensityMatrix(ComplexMatrix mat, std::vector<int> dims = {});
  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(int d);
  /// Normalizes a non-zero PSD matrix by its trace.
  static DensityMatrix from_unnormalized(const ComplexMatrix& m,
                                         std::vector<int> dims = {});

  const ComplexMatrix& mat() const { return mat_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return static_cast<int>(mat_.rows()); }
  /// Eigenvalues (descending) with the negative round-off clipped to zero.
  RealVector eigenvalues() const;
  DensityMatrix with_dims(std::vector<int> dims) const;

 private:
  ComplexMatrix mat_;
  std::vector<int> dims_;
};

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

// ---------------------------------------------------------------------------

/// Rényi order alpha >= 1; infinity is a distinguished value.
class RenyiOrder {
 public:
  /// Throws std::invalid_argument for alpha < 1 or a non-finite alpha.
  explicit RenyiOrder(double alpha);
  static RenyiOrder infinity() { return RenyiOrder(); }

  bool is_infinite() const { return infinite_; }
  bool is_von_neumann() const { return !infinite_ && alpha_ == 1.0; }
  /// Throws for the infinite order.
  double value() const;
  std::string to_string() const;

 private:
  RenyiOrder() : alpha_(0.0), infinite_(true) {}
  double alpha_;
  bool infinite_;
};

double shannon_entropy(const ProbDist& p);
/// Entropy of a clipped spectrum; no normalization is applied.
double spectrum_entropy(const RealVector& eigenvalues);
double spectrum_renyi(const RealVector& eigenvalues, const RenyiOrder& alpha);

double von_neumann_entropy(const DensityMatrix& rho);
double renyi_entropy(const DensityMatrix& rho, const RenyiOrder& alpha);

/// Sum_i sqrt(l_i) |v_i> (x) |i>; tracing the second factor returns rho.
PureState purify(const DensityMatrix& rho);

// ---------------------------------------------------------------------------
// Seeded randomness. Every generator is a pure function of its arguments.

ComplexMatrix random_haar_unitary(int d, std::uint64_t seed);
PureState random_pure(int d, std::uint64_t seed);
DensityMatrix random_density(int d, int rank, std::uint64_t seed);
/// Complex Ginibre matrix (i.i.d. standard complex Gaussian entries).
ComplexMatrix random_ginibre(int rows, int cols, std::uint64_t seed);

}  // namespace sumcap

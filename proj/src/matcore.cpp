#include "sumcap/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sumcap {

namespace {

int product(std::span<const int> dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

std::vector<int> strides_of(std::span<const int> dims) {
  std::vector<int> strides(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k)
    strides[k] = strides[k + 1] * dims[k + 1];
  return strides;
}

// Flat offsets of every multi-index over the listed subsystems, in
// lexicographic order of those subsystems.
std::vector<int> offsets_over(std::span<const int> dims,
                              const std::vector<int>& strides,
                              const std::vector<int>& which) {
  std::vector<int> out{0};
  for (int s : which) {
    std::vector<int> next;
    next.reserve(out.size() * dims[s]);
    for (int base : out)
      for (int v = 0; v < dims[s]; ++v) next.push_back(base + v * strides[s]);
    out = std::move(next);
  }
  return out;
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

RealVector clipped(const RealVector& values) {
  RealVector out = values;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out[i] < -kEigenClip) {
      std::ostringstream msg;
      msg << "negative eigenvalue " << out[i] << " below clipping threshold";
      throw std::invalid_argument(msg.str());
    }
    out[i] = std::max(out[i], 0.0);
  }
  return out;
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix direct_sum_mat(std::span<const ComplexMatrix> blocks) {
  if (blocks.empty()) throw std::invalid_argument("direct_sum_mat: empty block list");
  Eigen::Index n = 0;
  for (const auto& b : blocks) {
    if (b.rows() != b.cols()) throw std::invalid_argument("direct_sum_mat: block is not square");
    n += b.rows();
  }
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const int> dims,
                            std::span<const int> keep) {
  const int total = product(dims);
  if (m.rows() != total || m.cols() != total)
    throw std::invalid_argument("partial_trace: dims do not match matrix size");
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<int> traced;
  for (int s = 0; s < static_cast<int>(dims.size()); ++s) {
    if (!std::binary_search(kept.begin(), kept.end(), s)) traced.push_back(s);
  }
  for (int s : kept)
    if (s < 0 || s >= static_cast<int>(dims.size()))
      throw std::invalid_argument("partial_trace: subsystem index out of range");

  const auto strides = strides_of(dims);
  const auto kept_off = offsets_over(dims, strides, kept);
  const auto traced_off = offsets_over(dims, strides, traced);
  const auto n = static_cast<Eigen::Index>(kept_off.size());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      Complex acc = 0.0;
      for (int t : traced_off) acc += m(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = acc;
    }
  return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m,
                                 std::span<const int> dims,
                                 std::span<const int> perm) {
  const int total = product(dims);
  if (m.rows() != total || m.cols() != total || perm.size() != dims.size())
    throw std::invalid_argument("permute_subsystems: dims do not match matrix size");
  std::vector<int> new_dims(dims.size());
  for (std::size_t k = 0; k < perm.size(); ++k) new_dims[k] = dims[perm[k]];
  const auto old_strides = strides_of(dims);
  const auto new_strides = strides_of(new_dims);

  // target[i] = flat index in the permuted ordering of input basis state i
  std::vector<int> target(total, 0);
  for (int i = 0; i < total; ++i) {
    int t = 0;
    for (std::size_t k = 0; k < perm.size(); ++k) {
      const int digit = (i / old_strides[perm[k]]) % dims[perm[k]];
      t += digit * new_strides[k];
    }
    target[i] = t;
  }
  ComplexMatrix out(total, total);
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) out(target[i], target[j]) = m(i, j);
  return out;
}

Spectrum hermitian_spectrum(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol))
    throw std::invalid_argument("hermitian_spectrum: matrix is not Hermitian");
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_spectrum: eigensolver failed");
  // Eigen returns ascending order.
  Spectrum s;
  s.values = solver.eigenvalues().reverse();
  s.vectors = solver.eigenvectors().rowwise().reverse();
  return s;
}

// ---------------------------------------------------------------------------

ProbDist::ProbDist(std::vector<double> weights) : weights_(std::move(weights)) {
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) throw std::invalid_argument("ProbDist: negative or NaN weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("ProbDist: weights do not sum to 1");
}

ProbDist ProbDist::normalized(std::vector<double> weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("ProbDist: negative or NaN weight");
    sum += w;
  }
  if (sum <= 0.0) throw std::invalid_argument("ProbDist: all weights are zero");
  for (double& w : weights) w /= sum;
  // Push the residual rounding into the largest weight.
  const double resid = 1.0 - std::accumulate(weights.begin(), weights.end(), 0.0);
  *std::max_element(weights.begin(), weights.end()) += resid;
  return ProbDist(std::move(weights));
}

ProbDist ProbDist::uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("ProbDist: empty distribution");
  return normalized(std::vector<double>(n, 1.0));
}

PureState::PureState(ComplexVector vec, std::vector<int> dims)
    : vec_(std::move(vec)), dims_(std::move(dims)) {
  if (vec_.size() == 0) throw std::invalid_argument("PureState: empty vector");
  if (std::abs(vec_.norm() - 1.0) > 1e-12) throw std::invalid_argument("PureState: vector is not normalized");
  if (dims_.empty()) dims_ = {static_cast<int>(vec_.size())};
  if (product(dims_) != vec_.size()) throw std::invalid_argument("PureState: dims do not match vector length");
}

PureState PureState::normalized(const ComplexVector& vec, std::vector<int> dims) {
  const double n = vec.norm();
  if (n == 0.0) throw std::invalid_argument("PureState: zero vector");
  return PureState(vec / n, std::move(dims));
}

PureState PureState::basis(int d, int index) {
  if (index < 0 || index >= d) throw std::invalid_argument("PureState::basis: index out of range");
  ComplexVector v = ComplexVector::Zero(d);
  v[index] = 1.0;
  return PureState(std::move(v));
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, std::vector<int> dims)
    : mat_(std::move(mat)), dims_(std::move(dims)) {
  if (mat_.rows() == 0 || mat_.rows() != mat_.cols())
    throw std::invalid_argument("DensityMatrix: matrix must be square and non-empty");
  if (dims_.empty()) dims_ = {static_cast<int>(mat_.rows())};
  if (product(dims_) != mat_.rows())
    throw std::invalid_argument("DensityMatrix: dims do not match matrix size");
  if (!is_hermitian(mat_, 1e-10)) throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  mat_ = 0.5 * (mat_ + mat_.adjoint()).eval();
  if (std::abs(mat_.trace().real() - 1.0) > kTraceTolerance)
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  const RealVector ev = hermitian_spectrum(mat_).values;
  if (ev[ev.size() - 1] < -kEigenClip)
    throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector(), psi.dims());
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
  return DensityMatrix(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::from_unnormalized(const ComplexMatrix& m,
                                               std::vector<int> dims) {
  const double tr = m.trace().real();
  if (!(tr > 0.0)) throw std::invalid_argument("DensityMatrix: non-positive trace");
  return DensityMatrix(m / tr, std::move(dims));
}

RealVector DensityMatrix::eigenvalues() const {
  return clipped(hermitian_spectrum(mat_).values);
}

DensityMatrix DensityMatrix::with_dims(std::vector<int> dims) const {
  if (product(dims) != dim()) throw std::invalid_argument("DensityMatrix: dims do not match matrix size");
  DensityMatrix out = *this;
  out.dims_ = std::move(dims);
  return out;
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(kron(a.mat(), b.mat()), std::move(dims));
}

// ---------------------------------------------------------------------------

RenyiOrder::RenyiOrder(double alpha) : alpha_(alpha), infinite_(false) {
  if (!std::isfinite(alpha)) throw std::invalid_argument("RenyiOrder: use RenyiOrder::infinity() for alpha = inf");
  if (alpha < 1.0) throw std::invalid_argument("RenyiOrder: alpha must be >= 1");
}

double RenyiOrder::value() const {
  if (infinite_) throw std::logic_error("RenyiOrder: infinite order has no finite value");
  return alpha_;
}

std::string RenyiOrder::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os << alpha_;
  return os.str();
}

double shannon_entropy(const ProbDist& p) {
  double s = 0.0;
  for (double w : p.weights()) s -= xlog2x(w);
  return s;
}

double spectrum_entropy(const RealVector& eigenvalues) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    s -= xlog2x(std::max(eigenvalues[i], 0.0));
  return std::max(s, 0.0);  // round-off near pure spectra
}

double spectrum_renyi(const RealVector& eigenvalues, const RenyiOrder& alpha) {
  if (alpha.is_von_neumann()) return spectrum_entropy(eigenvalues);
  if (alpha.is_infinite()) return std::max(-std::log2(eigenvalues.maxCoeff()), 0.0);
  const double a = alpha.value();
  double tr = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i)
    if (eigenvalues[i] > 0.0) tr += std::pow(eigenvalues[i], a);
  return std::max(std::log2(tr) / (1.0 - a), 0.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return spectrum_entropy(rho.eigenvalues());
}

double renyi_entropy(const DensityMatrix& rho, const RenyiOrder& alpha) {
  return spectrum_renyi(rho.eigenvalues(), alpha);
}

PureState purify(const DensityMatrix& rho) {
  const Spectrum s = hermitian_spectrum(rho.mat(), 1e-10);
  const int d = rho.dim();
  ComplexVector psi = ComplexVector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < d; ++i) {
    const double w = std::sqrt(std::max(s.values[i], 0.0));
    if (w == 0.0) continue;
    for (int a = 0; a < d; ++a) psi[a * d + i] += w * s.vectors(a, i);
  }
  std::vector<int> dims = rho.dims();
  dims.push_back(d);
  return PureState::normalized(psi, std::move(dims));
}

// ---------------------------------------------------------------------------

ComplexMatrix random_ginibre(int rows, int cols, std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("random_ginibre: dimensions must be >= 1");
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const double re = normal(engine);
      const double im = normal(engine);
      g(r, c) = Complex(re, im) / std::sqrt(2.0);
    }
  return g;
}

ComplexMatrix random_haar_unitary(int d, std::uint64_t seed) {
  const ComplexMatrix g = random_ginibre(d, d, seed);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fixing the phases of R's diagonal makes the distribution Haar.
  for (int k = 0; k < d; ++k) {
    const Complex rkk = r(k, k);
    const double mag = std::abs(rkk);
    if (mag > 0.0) q.col(k) *= rkk / mag;
  }
  return q;
}

PureState random_pure(int d, std::uint64_t seed) {
  return PureState::normalized(random_ginibre(d, 1, seed).col(0));
}

DensityMatrix random_density(int d, int rank, std::uint64_t seed) {
  if (rank < 1 || rank > d) throw std::invalid_argument("random_density: rank must lie in [1, d]");
  const ComplexMatrix g = random_ginibre(d, rank, seed);
  return DensityMatrix::from_unnormalized(g * g.adjoint());
}

}  // namespace sumcap

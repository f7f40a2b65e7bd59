#include "sumcap/channels.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sumcap {

namespace {

std::string fmt_double(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

Channel::Channel(std::vector<ComplexMatrix> kraus, std::string label)
    : kraus_(std::move(kraus)), label_(std::move(label)) {
  if (kraus_.empty()) throw std::invalid_argument("Channel: Kraus list is empty");
  d_out_ = static_cast<int>(kraus_.front().rows());
  d_in_ = static_cast<int>(kraus_.front().cols());
  if (d_in_ < 1 || d_out_ < 1) throw std::invalid_argument("Channel: Kraus operators must be non-empty");
  for (std::size_t i = 0; i < kraus_.size(); ++i) {
    if (kraus_[i].rows() != d_out_ || kraus_[i].cols() != d_in_) {
      std::ostringstream msg;
      msg << "Channel: Kraus operator " << i << " has shape " << kraus_[i].rows() << "x"
          << kraus_[i].cols() << ", expected " << d_out_ << "x" << d_in_;
      throw std::invalid_argument(msg.str());
    }
  }
  const double err = trace_preservation_error(kraus_);
  if (!(err <= kCptpTolerance)) {
    std::ostringstream msg;
    msg << "Channel: trace preservation violated, ||sum K^dag K - I||_max = " << err
        << " > " << kCptpTolerance;
    throw std::invalid_argument(msg.str());
  }
  stacked_.resize(static_cast<Eigen::Index>(kraus_.size()) * d_out_, d_in_);
  for (std::size_t i = 0; i < kraus_.size(); ++i)
    stacked_.middleRows(static_cast<Eigen::Index>(i) * d_out_, d_out_) = kraus_[i];
}

Channel Channel::relabeled(std::string label) const {
  Channel out = *this;
  out.label_ = std::move(label);
  return out;
}

ComplexMatrix Channel::apply(const ComplexMatrix& x) const {
  if (x.rows() != d_in_ || x.cols() != d_in_)
    throw std::invalid_argument("Channel::apply: input dimension does not match d_in");
  ComplexMatrix out = ComplexMatrix::Zero(d_out_, d_out_);
  for (const auto& k : kraus_) out.noalias() += k * x * k.adjoint();
  return out;
}

DensityMatrix Channel::apply(const DensityMatrix& rho) const {
  return DensityMatrix(apply(rho.mat()));
}

ComplexMatrix Channel::apply_pure(const ComplexVector& psi) const {
  if (psi.size() != d_in_) throw std::invalid_argument("Channel::apply_pure: dimension mismatch");
  const ComplexVector y = stacked_ * psi;
  const Eigen::Map<const ComplexMatrix> cols(y.data(), d_out_, kraus_count());
  return cols * cols.adjoint();
}

ComplexMatrix Channel::adjoint(const ComplexMatrix& y) const {
  if (y.rows() != d_out_ || y.cols() != d_out_)
    throw std::invalid_argument("Channel::adjoint: dimension mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(d_in_, d_in_);
  for (const auto& k : kraus_) out.noalias() += k.adjoint() * y * k;
  return out;
}

ComplexVector Channel::adjoint_times(const ComplexMatrix& y, const ComplexVector& psi) const {
  const ComplexVector kpsi = stacked_ * psi;
  const Eigen::Map<const ComplexMatrix> cols(kpsi.data(), d_out_, kraus_count());
  const ComplexMatrix ycols = y * cols;
  const Eigen::Map<const ComplexVector> flat(ycols.data(), ycols.size());
  return stacked_.adjoint() * flat;
}

double trace_preservation_error(std::span<const ComplexMatrix> kraus) {
  if (kraus.empty()) return std::numeric_limits<double>::infinity();
  const auto d_in = kraus.front().cols();
  ComplexMatrix sum = ComplexMatrix::Zero(d_in, d_in);
  for (const auto& k : kraus) sum.noalias() += k.adjoint() * k;
  return max_abs(sum - ComplexMatrix::Identity(d_in, d_in));
}

// ---------------------------------------------------------------------------

ChoiMatrix::ChoiMatrix(ComplexMatrix mat, int d_in, int d_out)
    : mat_(std::move(mat)), d_in_(d_in), d_out_(d_out) {
  const Eigen::Index n = static_cast<Eigen::Index>(d_in) * d_out;
  if (d_in < 1 || d_out < 1 || mat_.rows() != n || mat_.cols() != n)
    throw std::invalid_argument("ChoiMatrix: matrix size does not equal d_in * d_out");
  if (!is_hermitian(mat_, 1e-8)) throw std::invalid_argument("ChoiMatrix: matrix is not Hermitian");
  const Spectrum s = hermitian_spectrum(mat_, 1e-8);
  if (s.values[s.values.size() - 1] < -1e-8)
    throw std::invalid_argument("ChoiMatrix: not positive semidefinite (map is not completely positive)");
  const int dims[] = {d_out, d_in};
  const int keep[] = {1};
  const ComplexMatrix reduced = partial_trace(mat_, dims, keep);
  if (max_abs(reduced - ComplexMatrix::Identity(d_in, d_in)) > 1e-8)
    throw std::invalid_argument("ChoiMatrix: partial trace over output is not identity (map is not trace preserving)");
}

ChoiMatrix choi(const Channel& t) {
  const Eigen::Index n = static_cast<Eigen::Index>(t.d_in()) * t.d_out();
  ComplexMatrix c = ComplexMatrix::Zero(n, n);
  for (const auto& k : t.kraus()) {
    // Row-major vectorization of K: index a * d_in + i.
    const ComplexMatrix kt = k.transpose();
    const Eigen::Map<const ComplexVector> v(kt.data(), n);
    c.noalias() += v * v.adjoint();
  }
  return ChoiMatrix(std::move(c), t.d_in(), t.d_out());
}

Channel kraus_from_choi(const ChoiMatrix& c, std::string label) {
  const Spectrum s = hermitian_spectrum(c.mat(), 1e-8);
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index k = 0; k < s.values.size(); ++k) {
    if (s.values[k] < 1e-10) continue;
    const ComplexVector v = std::sqrt(s.values[k]) * s.vectors.col(k);
    ComplexMatrix op(c.d_out(), c.d_in());
    for (int a = 0; a < c.d_out(); ++a)
      for (int i = 0; i < c.d_in(); ++i) op(a, i) = v[a * c.d_in() + i];
    kraus.push_back(std::move(op));
  }
  return Channel(std::move(kraus), std::move(label));
}

Channel tensor(const Channel& t1, const Channel& t2) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<std::size_t>(t1.kraus_count()) * t2.kraus_count());
  for (const auto& a : t1.kraus())
    for (const auto& b : t2.kraus()) kraus.push_back(kron(a, b));
  return Channel(std::move(kraus), "(" + t1.label() + " x " + t2.label() + ")");
}

Channel direct_sum(std::span<const Channel> channels) {
  if (channels.empty()) throw std::invalid_argument("direct_sum: empty channel list");
  int d_in = 0;
  int d_out = 0;
  for (const auto& t : channels) {
    d_in += t.d_in();
    d_out += t.d_out();
  }
  std::vector<ComplexMatrix> kraus;
  std::string label = "(";
  int in_off = 0;
  int out_off = 0;
  for (std::size_t b = 0; b < channels.size(); ++b) {
    const auto& t = channels[b];
    for (const auto& k : t.kraus()) {
      ComplexMatrix big = ComplexMatrix::Zero(d_out, d_in);
      big.block(out_off, in_off, t.d_out(), t.d_in()) = k;
      kraus.push_back(std::move(big));
    }
    in_off += t.d_in();
    out_off += t.d_out();
    label += (b ? " + " : "") + t.label();
  }
  return Channel(std::move(kraus), label + ")");
}

Channel direct_sum(const Channel& t1, const Channel& t2) {
  const Channel pair[] = {t1, t2};
  return direct_sum(pair);
}

Channel pad_output(const Channel& t, const DensityMatrix& sigma) {
  const Spectrum s = hermitian_spectrum(sigma.mat(), 1e-10);
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index k = 0; k < s.values.size(); ++k) {
    if (s.values[k] <= 0.0) continue;
    const ComplexMatrix col = std::sqrt(s.values[k]) * s.vectors.col(k);
    for (const auto& op : t.kraus()) kraus.push_back(kron(op, col));
  }
  return Channel(std::move(kraus), "pad(" + t.label() + ")");
}

Channel complementary(const Channel& t) {
  // E_a has row i equal to row a of K_i.
  const int k = t.kraus_count();
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(t.d_out());
  for (int a = 0; a < t.d_out(); ++a) {
    ComplexMatrix e(k, t.d_in());
    for (int i = 0; i < k; ++i) e.row(i) = t.kraus()[i].row(a);
    kraus.push_back(std::move(e));
  }
  return Channel(std::move(kraus), "complementary(" + t.label() + ")");
}

bool is_unital(const Channel& t) {
  if (t.d_in() != t.d_out()) throw std::invalid_argument("is_unital: channel is not square");
  const int d = t.d_in();
  const ComplexMatrix mixed = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
  return max_abs(t.apply(mixed) - mixed) <= 1e-9;
}

// ---------------------------------------------------------------------------

Channel identity_channel(int d) {
  if (d < 1) throw std::invalid_argument("identity_channel: d must be >= 1");
  return Channel({ComplexMatrix::Identity(d, d)}, "identity(" + std::to_string(d) + ")");
}

Channel depolarizing(int d, double lambda) {
  if (d < 1) throw std::invalid_argument("depolarizing: d must be >= 1");
  const double d2 = static_cast<double>(d) * d;
  const double lower = d > 1 ? -1.0 / (d2 - 1.0) : -1.0;
  if (!(lambda >= lower - 1e-15 && lambda <= 1.0 + 1e-15)) {
    std::ostringstream msg;
    msg << "depolarizing: lambda = " << lambda << " outside [" << lower << ", 1]";
    throw std::invalid_argument(msg.str());
  }
  // Weyl operators X^a Z^b twirl to the completely depolarizing map.
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / d);
  std::vector<ComplexMatrix> kraus;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      double weight = (1.0 - lambda) / d2;
      if (a == 0 && b == 0) weight += lambda;
      if (weight <= 0.0) continue;
      ComplexMatrix w = ComplexMatrix::Zero(d, d);
      for (int j = 0; j < d; ++j) w((j + a) % d, j) = std::pow(omega, j * b);
      kraus.push_back(std::sqrt(weight) * w);
    }
  return Channel(std::move(kraus), "depolarizing(" + std::to_string(d) + "," + fmt_double(lambda) + ")");
}

Channel dephasing(int d) {
  if (d < 1) throw std::invalid_argument("dephasing: d must be >= 1");
  std::vector<ComplexMatrix> kraus;
  for (int i = 0; i < d; ++i) {
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    p(i, i) = 1.0;
    kraus.push_back(std::move(p));
  }
  return Channel(std::move(kraus), "dephasing(" + std::to_string(d) + ")");
}

Channel unitary_channel(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("unitary_channel: matrix is not square");
  return Channel({u}, "unitary(" + std::to_string(u.rows()) + ")");
}

Channel constant_channel(const DensityMatrix& sigma, int d_in) {
  if (d_in == 0) d_in = sigma.dim();
  if (d_in < 1) throw std::invalid_argument("constant_channel: d_in must be >= 1");
  const Spectrum s = hermitian_spectrum(sigma.mat(), 1e-10);
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index k = 0; k < s.values.size(); ++k) {
    if (s.values[k] <= 0.0) continue;
    for (int j = 0; j < d_in; ++j) {
      ComplexMatrix op = ComplexMatrix::Zero(sigma.dim(), d_in);
      op.col(j) = std::sqrt(s.values[k]) * s.vectors.col(k);
      kraus.push_back(std::move(op));
    }
  }
  return Channel(std::move(kraus), "constant(" + std::to_string(sigma.dim()) + ")");
}

Channel partial_trace_channel(int d_a, int d_b, Traced traced) {
  if (d_a < 1 || d_b < 1) throw std::invalid_argument("partial_trace_channel: dimensions must be >= 1");
  std::vector<ComplexMatrix> kraus;
  if (traced == Traced::B) {
    for (int j = 0; j < d_b; ++j) {
      ComplexMatrix bra = ComplexMatrix::Zero(1, d_b);
      bra(0, j) = 1.0;
      kraus.push_back(kron(ComplexMatrix::Identity(d_a, d_a), bra));
    }
  } else {
    for (int j = 0; j < d_a; ++j) {
      ComplexMatrix bra = ComplexMatrix::Zero(1, d_a);
      bra(0, j) = 1.0;
      kraus.push_back(kron(bra, ComplexMatrix::Identity(d_b, d_b)));
    }
  }
  return Channel(std::move(kraus), std::string("partial_trace(") + std::to_string(d_a) + "," +
                                       std::to_string(d_b) + (traced == Traced::B ? ",B)" : ",A)"));
}

Channel werner_holevo(int d) {
  if (d < 2) throw std::invalid_argument("werner_holevo: d must be >= 2");
  const double scale = 1.0 / std::sqrt(static_cast<double>(d - 1));
  std::vector<ComplexMatrix> kraus;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      ComplexMatrix k = ComplexMatrix::Zero(d, d);
      k(i, j) = scale;
      k(j, i) = -scale;
      kraus.push_back(std::move(k));
    }
  return Channel(std::move(kraus), "werner_holevo(" + std::to_string(d) + ")");
}

Channel mixed_unitary(const ProbDist& p, std::span<const ComplexMatrix> unitaries) {
  if (p.size() != unitaries.size() || unitaries.empty())
    throw std::invalid_argument("mixed_unitary: probabilities and unitaries differ in length");
  const auto d = unitaries.front().rows();
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < unitaries.size(); ++i) {
    const auto& u = unitaries[i];
    if (u.rows() != d || u.cols() != d) throw std::invalid_argument("mixed_unitary: unitaries differ in dimension");
    if (max_abs(u.adjoint() * u - ComplexMatrix::Identity(d, d)) > 1e-10)
      throw std::invalid_argument("mixed_unitary: matrix is not unitary");
    if (p[i] > 0.0) kraus.push_back(std::sqrt(p[i]) * u);
  }
  return Channel(std::move(kraus), "mixed_unitary(" + std::to_string(d) + ")");
}

Channel random_channel(int d_in, int d_out, int env_dim, std::uint64_t seed) {
  if (d_in < 1 || d_out < 1 || env_dim < 1)
    throw std::invalid_argument("random_channel: dimensions must be >= 1");
  const int big = d_out * env_dim;
  if (big < d_in) throw std::invalid_argument("random_channel: d_out * env_dim must be >= d_in");
  const ComplexMatrix v = random_haar_unitary(big, seed).leftCols(d_in);
  std::vector<ComplexMatrix> kraus;
  for (int e = 0; e < env_dim; ++e) {
    ComplexMatrix k(d_out, d_in);
    for (int a = 0; a < d_out; ++a) k.row(a) = v.row(a * env_dim + e);
    kraus.push_back(std::move(k));
  }
  std::ostringstream label;
  label << "random(" << d_in << "," << d_out << "," << env_dim << ",seed=" << seed << ")";
  return Channel(std::move(kraus), label.str());
}

}  // namespace sumcap

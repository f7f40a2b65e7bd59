#include "sumcap/quantities.hpp"

#include "sumcap/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sumcap {

namespace {

// Floor applied to eigenvalues before taking logarithms in gradients.
constexpr double kLogFloor = 1e-15;

struct SpectralEntropy {
  double entropy = 0.0;
  ComplexMatrix log2;  // log2 of the (floored) matrix
};

// Entropy and matrix logarithm of a PSD matrix that may carry round-off.
SpectralEntropy entropy_and_log(const ComplexMatrix& sigma) {
  const Spectrum s = hermitian_spectrum(sigma, 1e-8);
  RealVector ev = s.values.cwiseMax(0.0);
  SpectralEntropy out;
  out.entropy = spectrum_entropy(ev);
  out.log2 = hermitian_function(s, [](double x) { return std::log2(std::max(x, kLogFloor)); });
  return out;
}

double entropy_of(const ComplexMatrix& sigma) {
  return spectrum_entropy(hermitian_spectrum(sigma, 1e-8).values.cwiseMax(0.0));
}

RealVector to_real(const ComplexMatrix& m) {
  RealVector x(2 * m.size());
  const Eigen::Map<const ComplexVector> flat(m.data(), m.size());
  x.head(m.size()) = flat.real();
  x.tail(m.size()) = flat.imag();
  return x;
}

ComplexMatrix to_complex(const RealVector& x, Eigen::Index rows, Eigen::Index cols,
                         Eigen::Index offset = 0) {
  const Eigen::Index n = rows * cols;
  ComplexMatrix m(rows, cols);
  Eigen::Map<ComplexVector> flat(m.data(), n);
  flat.real() = x.segment(offset, n);
  flat.imag() = x.segment(offset + n, n);
  return m;
}

optim::Settings settings_of(const OptimizerOptions& o) {
  return {o.max_iterations, o.objective_tolerance};
}

std::uint64_t restart_seed(const OptimizerOptions& o, int restart) {
  return o.seed + static_cast<std::uint64_t>(restart);
}

struct RestartOutcome {
  double value = 0.0;
  bool converged = false;
  std::optional<Witness> witness;
};

// Best restart under `better`; ties keep the lowest index.
template <class Better>
int pick_best(const std::vector<RestartOutcome>& runs, Better better) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(runs.size()); ++i)
    if (better(runs[i].value, runs[best].value)) best = i;
  return best;
}

QuantityResult assemble(std::vector<RestartOutcome> runs, int best, BoundKind kind) {
  QuantityResult r;
  r.value = runs[best].value;
  r.witness_value = r.value;
  r.witness = std::move(*runs[best].witness);
  r.bound_kind = kind;
  r.restarts_used = static_cast<int>(runs.size());
  r.best_restart_index = best;
  r.converged = runs[best].converged;
  return r;
}

// ---------------------------------------------------------------------------
// Minimal output entropy: monotone linearization iteration. For a concave
// (alpha = 1) or convex-in-norm (alpha > 1) objective, replacing the input by
// the top eigenvector of T*(F(sigma)) never worsens the output value.

ComplexMatrix linearization_weight(const Spectrum& s, const RenyiOrder& alpha) {
  if (alpha.is_infinite()) return s.vectors.col(0) * s.vectors.col(0).adjoint();
  if (alpha.is_von_neumann())
    return hermitian_function(s, [](double x) { return std::log2(std::max(x, kLogFloor)); });
  const double a = alpha.value();
  return hermitian_function(s, [a](double x) { return x > 0.0 ? std::pow(x, a - 1.0) : 0.0; });
}

RestartOutcome smin_restart(const Channel& t, const RenyiOrder& alpha,
                            const OptimizerOptions& opts, int restart) {
  ComplexVector psi = random_pure(t.d_in(), restart_seed(opts, restart)).vec();
  Spectrum s = hermitian_spectrum(t.apply_pure(psi), 1e-8);
  double value = spectrum_renyi(s.values.cwiseMax(0.0), alpha);
  ComplexVector best_psi = psi;
  double best = value;
  int stalled = 0;
  bool converged = false;
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    const ComplexMatrix f = linearization_weight(s, alpha);
    const ComplexMatrix m = t.adjoint(f);
    psi = hermitian_spectrum(0.5 * (m + m.adjoint()), 1e-6).vectors.col(0);
    s = hermitian_spectrum(t.apply_pure(psi), 1e-8);
    value = spectrum_renyi(s.values.cwiseMax(0.0), alpha);
    const double gain = best - value;
    if (value < best) {
      best = value;
      best_psi = psi;
    }
    stalled = gain <= opts.objective_tolerance * std::max(1.0, std::abs(best)) ? stalled + 1 : 0;
    if (stalled >= 3) {
      converged = true;
      break;
    }
  }
  const PureState witness = PureState::normalized(best_psi);
  RestartOutcome out;
  out.value = output_renyi(t, witness, alpha);
  out.converged = converged;
  out.witness = witness;
  return out;
}

// ---------------------------------------------------------------------------
// Coherent / mutual information over rho = A A^dag / tr(A A^dag).

struct InputEntropyObjective {
  const Channel& t;
  const Channel& tc;
  bool include_input_entropy;

  double operator()(const RealVector& x, RealVector& grad) const {
    const int d = t.d_in();
    const ComplexMatrix a = to_complex(x, d, d);
    const ComplexMatrix aa = a * a.adjoint();
    const double tr = aa.trace().real();
    if (!(tr > 1e-300)) {
      grad.setZero(x.size());
      return std::numeric_limits<double>::infinity();
    }
    const ComplexMatrix rho = aa / tr;
    const SpectralEntropy out = entropy_and_log(t.apply(rho));
    const SpectralEntropy env = entropy_and_log(tc.apply(rho));
    double value = out.entropy - env.entropy;
    ComplexMatrix g = -t.adjoint(out.log2) + tc.adjoint(env.log2);
    if (include_input_entropy) {
      const SpectralEntropy in = entropy_and_log(rho);
      value += in.entropy;
      g -= in.log2;
    }
    g = 0.5 * (g + g.adjoint()).eval();
    const double gbar = (g * rho).trace().real();
    const ComplexMatrix da = 2.0 * (g - gbar * ComplexMatrix::Identity(d, d)) * a / tr;
    grad = -to_real(da);  // minimizing -value
    return -value;
  }
};

RestartOutcome input_entropy_restart(const Channel& t, const Channel& tc, bool mutual,
                                     const OptimizerOptions& opts, int restart) {
  const int d = t.d_in();
  const InputEntropyObjective objective{t, tc, mutual};
  const RealVector x0 = to_real(random_ginibre(d, d, restart_seed(opts, restart)));
  const optim::Outcome o = optim::lbfgs_minimize(objective, x0, settings_of(opts));
  const ComplexMatrix a = to_complex(o.x, d, d);
  const DensityMatrix rho = DensityMatrix::from_unnormalized(a * a.adjoint());
  RestartOutcome out;
  out.value = mutual ? mutual_objective(t, rho) : coherent_objective(t, rho);
  out.converged = o.converged;
  out.witness = rho;
  return out;
}

// ---------------------------------------------------------------------------
// HSW capacity over ensembles of m pure states; probabilities via softmax.

struct HolevoObjective {
  const Channel& t;
  int m;

  double operator()(const RealVector& x, RealVector& grad) const {
    const int d = t.d_in();
    const Eigen::Index block = 2 * d;
    grad.setZero(x.size());
    RealVector logits = x.tail(m);
    RealVector p = (logits.array() - logits.maxCoeff()).exp();
    p /= p.sum();

    std::vector<ComplexVector> psi(m);
    std::vector<double> norm2(m);
    std::vector<ComplexMatrix> sigma(m);
    std::vector<SpectralEntropy> member(m);
    ComplexMatrix avg = ComplexMatrix::Zero(t.d_out(), t.d_out());
    for (int k = 0; k < m; ++k) {
      psi[k] = to_complex(x, d, 1, k * block).col(0);
      norm2[k] = psi[k].squaredNorm();
      if (!(norm2[k] > 1e-300)) return std::numeric_limits<double>::infinity();
      sigma[k] = t.apply_pure(psi[k]) / norm2[k];
      member[k] = entropy_and_log(sigma[k]);
      avg += p[k] * sigma[k];
    }
    const SpectralEntropy mean = entropy_and_log(avg);
    double chi = mean.entropy;
    RealVector rel(m);
    for (int k = 0; k < m; ++k) {
      chi -= p[k] * member[k].entropy;
      rel[k] = -member[k].entropy - (sigma[k] * mean.log2).trace().real();
      const ComplexMatrix diff = member[k].log2 - mean.log2;
      const ComplexVector gpsi = p[k] * t.adjoint_times(diff, psi[k]);
      const double gbar = psi[k].dot(gpsi).real() / norm2[k];
      const ComplexVector dpsi = 2.0 * (gpsi - gbar * psi[k]) / norm2[k];
      grad.segment(k * block, d) = -dpsi.real();
      grad.segment(k * block + d, d) = -dpsi.imag();
    }
    const double mean_rel = p.dot(rel);
    grad.tail(m) = -(p.array() * (rel.array() - mean_rel)).matrix();
    return -chi;
  }
};

Ensemble holevo_ensemble(const Channel& t, const RealVector& x, int m) {
  const int d = t.d_in();
  RealVector logits = x.tail(m);
  RealVector p = (logits.array() - logits.maxCoeff()).exp();
  std::vector<double> probs(p.data(), p.data() + m);
  std::vector<DensityMatrix> states;
  states.reserve(m);
  for (int k = 0; k < m; ++k)
    states.push_back(DensityMatrix::from_pure(
        PureState::normalized(to_complex(x, d, 1, k * 2 * d).col(0))));
  return Ensemble(ProbDist::normalized(std::move(probs)), std::move(states));
}

// -D(T(psi) || sigma) with log2 sigma fixed; a pure input beating chi here
// can enter the ensemble and raise chi.
struct DivergenceObjective {
  const Channel& t;
  const ComplexMatrix& log_mean;

  double operator()(const RealVector& x, RealVector& grad) const {
    const int d = t.d_in();
    const ComplexVector psi = to_complex(x, d, 1).col(0);
    const double n = psi.squaredNorm();
    grad.setZero(x.size());
    if (!(n > 1e-300)) return std::numeric_limits<double>::infinity();
    const ComplexMatrix sigma = t.apply_pure(psi) / n;
    const SpectralEntropy e = entropy_and_log(sigma);
    const double div = -e.entropy - (sigma * log_mean).trace().real();
    const ComplexVector g = t.adjoint_times(e.log2 - log_mean, psi);
    const ComplexVector dpsi = 2.0 * (g - (psi.dot(g).real() / n) * psi) / n;
    grad.head(d) = -dpsi.real();
    grad.tail(d) = -dpsi.imag();
    return -div;
  }
};

constexpr int kHolevoRefinements = 25;
constexpr int kDivergenceStarts = 6;

RestartOutcome holevo_restart(const Channel& t, int m, const OptimizerOptions& opts,
                              int restart) {
  const int d = t.d_in();
  const std::uint64_t seed = restart_seed(opts, restart);
  const ComplexMatrix start = random_ginibre(d, m, seed);
  RealVector x = RealVector::Zero(2 * d * m + m);
  for (int k = 0; k < m; ++k) {
    x.segment(k * 2 * d, d) = start.col(k).real();
    x.segment(k * 2 * d + d, d) = start.col(k).imag();
  }
  const optim::Settings settings = settings_of(opts);
  optim::Outcome o = optim::lbfgs_minimize(HolevoObjective{t, m}, x, settings);

  // Column generation: swap the lightest member for the input of largest
  // divergence from the average output until none exceeds chi.
  for (int round = 0; round < kHolevoRefinements; ++round) {
    const Ensemble e = holevo_ensemble(t, o.x, m);
    const double chi = holevo_quantity(t, e);
    ComplexMatrix mean = ComplexMatrix::Zero(t.d_out(), t.d_out());
    for (std::size_t k = 0; k < e.size(); ++k) mean += e.probs()[k] * t.apply(e.states()[k]).mat();
    const ComplexMatrix log_mean = entropy_and_log(mean).log2;
    const ComplexMatrix probes = random_ginibre(d, kDivergenceStarts, seed ^ (0x9e3779b97f4a7c15ULL * (round + 1)));
    RealVector best;
    double best_div = chi;
    for (int s = 0; s < kDivergenceStarts; ++s) {
      RealVector y(2 * d);
      y.head(d) = probes.col(s).real();
      y.tail(d) = probes.col(s).imag();
      const optim::Outcome q = optim::lbfgs_minimize(DivergenceObjective{t, log_mean}, y, settings);
      if (-q.value > best_div) {
        best_div = -q.value;
        best = q.x;
      }
    }
    if (best.size() == 0 || best_div - chi < 1e-7) break;
    RealVector candidate = o.x;
    Eigen::Index lightest = 0;
    RealVector logits = candidate.tail(m);
    logits.minCoeff(&lightest);
    candidate.segment(lightest * 2 * d, 2 * d) = best / best.norm();
    candidate[2 * d * m + lightest] = logits.mean();
    const optim::Outcome next = optim::lbfgs_minimize(HolevoObjective{t, m}, candidate, settings);
    if (!(next.value < o.value - 1e-12)) break;
    o = next;
  }

  Ensemble e = holevo_ensemble(t, o.x, m);
  RestartOutcome out;
  out.value = holevo_quantity(t, e);
  out.converged = o.converged;
  out.witness = std::move(e);
  return out;
}

// ---------------------------------------------------------------------------
// Convex closure: decompositions of rho = W W^dag are psi_k = W u_k with
// u_k the rows of an m x r isometry U.

struct Purification {
  ComplexMatrix w;  // d x r, columns sqrt(l_i) v_i
};

Purification spectral_factor(const DensityMatrix& rho) {
  const Spectrum s = hermitian_spectrum(rho.mat(), 1e-10);
  int r = 0;
  for (Eigen::Index i = 0; i < s.values.size(); ++i)
    if (s.values[i] > 1e-12) ++r;
  Purification p;
  p.w.resize(rho.dim(), std::max(r, 1));
  for (int i = 0; i < std::max(r, 1); ++i)
    p.w.col(i) = std::sqrt(std::max(s.values[i], 0.0)) * s.vectors.col(i);
  return p;
}

struct RoofObjective {
  const Channel& t;
  const ComplexMatrix& w;

  double operator()(const ComplexMatrix& u, ComplexMatrix& egrad) const {
    const ComplexMatrix members = w * u.transpose();  // column k = psi_k
    ComplexMatrix gpsi = ComplexMatrix::Zero(members.rows(), members.cols());
    double value = 0.0;
    for (Eigen::Index k = 0; k < members.cols(); ++k) {
      const ComplexVector psi = members.col(k);
      const double n = psi.squaredNorm();
      if (n < 1e-300) continue;
      const SpectralEntropy e = entropy_and_log(t.apply_pure(psi) / n);
      value += n * e.entropy;
      gpsi.col(k) = -2.0 * t.adjoint_times(e.log2, psi);
    }
    egrad = (w.adjoint() * gpsi).transpose();
    return value;
  }
};

Ensemble roof_ensemble(const ComplexMatrix& w, const ComplexMatrix& u, const std::vector<int>& dims) {
  const ComplexMatrix members = w * u.transpose();
  std::vector<double> probs;
  std::vector<DensityMatrix> states;
  for (Eigen::Index k = 0; k < members.cols(); ++k) {
    const double n = members.col(k).squaredNorm();
    if (n < 1e-300) continue;
    probs.push_back(n);
    states.push_back(DensityMatrix::from_pure(PureState::normalized(members.col(k), dims)));
  }
  return Ensemble(ProbDist::normalized(std::move(probs)), std::move(states));
}

void check_input_dim(const Channel& t, const DensityMatrix& rho, const char* who) {
  if (rho.dim() != t.d_in())
    throw std::invalid_argument(std::string(who) + ": state dimension does not match channel input");
}

}  // namespace

// ---------------------------------------------------------------------------

void OptimizerOptions::validate() const {
  if (restarts < 1) throw std::invalid_argument("OptimizerOptions: restarts must be >= 1");
  if (max_iterations < 1) throw std::invalid_argument("OptimizerOptions: max_iterations must be >= 1");
  if (!(objective_tolerance > 0.0)) throw std::invalid_argument("OptimizerOptions: tolerance must be > 0");
  if (ensemble_size && *ensemble_size < 1) throw std::invalid_argument("OptimizerOptions: ensemble_size must be >= 1");
  if (decomposition_size && *decomposition_size < 1)
    throw std::invalid_argument("OptimizerOptions: decomposition_size must be >= 1");
}

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::ExactClosedForm: return "exact-closed-form";
    case BoundKind::UpperBound: return "upper-bound";
    case BoundKind::LowerBound: return "lower-bound";
  }
  return "unknown";
}

Ensemble::Ensemble(ProbDist probs, std::vector<DensityMatrix> states)
    : probs_(std::move(probs)), states_(std::move(states)) {
  if (states_.empty() || probs_.size() != states_.size())
    throw std::invalid_argument("Ensemble: probabilities and states differ in length");
  for (const auto& s : states_)
    if (s.dim() != states_.front().dim()) throw std::invalid_argument("Ensemble: states differ in dimension");
}

DensityMatrix Ensemble::average() const {
  ComplexMatrix avg = ComplexMatrix::Zero(states_.front().dim(), states_.front().dim());
  for (std::size_t k = 0; k < states_.size(); ++k) avg += probs_[k] * states_[k].mat();
  return DensityMatrix(std::move(avg), states_.front().dims());
}

double output_renyi(const Channel& t, const PureState& psi, const RenyiOrder& alpha) {
  if (psi.dim() != t.d_in()) throw std::invalid_argument("output_renyi: dimension mismatch");
  const RealVector ev = hermitian_spectrum(t.apply_pure(psi.vec()), 1e-8).values.cwiseMax(0.0);
  return spectrum_renyi(ev, alpha);
}

double coherent_objective(const Channel& t, const DensityMatrix& rho) {
  check_input_dim(t, rho, "coherent_objective");
  return entropy_of(t.apply(rho.mat())) - entropy_of(complementary(t).apply(rho.mat()));
}

double mutual_objective(const Channel& t, const DensityMatrix& rho) {
  check_input_dim(t, rho, "mutual_objective");
  return von_neumann_entropy(rho) + coherent_objective(t, rho);
}

double average_output_entropy(const Channel& t, const Ensemble& e) {
  double h = 0.0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    check_input_dim(t, e.states()[k], "average_output_entropy");
    if (e.probs()[k] > 0.0) h += e.probs()[k] * entropy_of(t.apply(e.states()[k].mat()));
  }
  return h;
}

double holevo_quantity(const Channel& t, const Ensemble& e) {
  const DensityMatrix avg = e.average();
  check_input_dim(t, avg, "holevo_quantity");
  return entropy_of(t.apply(avg.mat())) - average_output_entropy(t, e);
}

// ---------------------------------------------------------------------------

QuantityResult min_output_renyi(const Channel& t, const RenyiOrder& alpha,
                                const OptimizerOptions& opts) {
  opts.validate();
  const auto runs = optim::run_indexed<RestartOutcome>(
      opts.restarts, [&](int r) { return smin_restart(t, alpha, opts, r); });
  const int best = pick_best(runs, [](double a, double b) { return a < b; });
  return assemble(runs, best, BoundKind::UpperBound);
}

QuantityResult coherent_information(const Channel& t, const OptimizerOptions& opts) {
  opts.validate();
  const Channel tc = complementary(t);
  auto runs = optim::run_indexed<RestartOutcome>(
      opts.restarts, [&](int r) { return input_entropy_restart(t, tc, false, opts, r); });
  const int best = pick_best(runs, [](double a, double b) { return a > b; });
  QuantityResult result = assemble(runs, best, BoundKind::LowerBound);
  // Every pure input gives exactly zero, so J >= 0 is always certified.
  if (result.value < 0.0) {
    const DensityMatrix pure = DensityMatrix::from_pure(PureState::basis(t.d_in(), 0));
    result.value = coherent_objective(t, pure);
    result.witness_value = result.value;
    result.witness = pure;
  }
  return result;
}

QuantityResult mutual_information(const Channel& t, const OptimizerOptions& opts) {
  opts.validate();
  const Channel tc = complementary(t);
  auto task = [&](int r) { return input_entropy_restart(t, tc, true, opts, r); };
  // The objective is concave, so two converged restarts that agree settle it.
  std::vector<RestartOutcome> runs;
  runs.push_back(task(0));
  if (opts.restarts > 1) {
    runs.push_back(task(1));
    const bool agree = runs[0].converged && runs[1].converged &&
                       std::abs(runs[0].value - runs[1].value) <= 1e-7;
    if (!agree && opts.restarts > 2) {
      auto rest = optim::run_indexed<RestartOutcome>(opts.restarts - 2,
                                                     [&](int r) { return task(r + 2); });
      for (auto& o : rest) runs.push_back(std::move(o));
    }
  }
  const int best = pick_best(runs, [](double a, double b) { return a > b; });
  return assemble(std::move(runs), best, BoundKind::ExactClosedForm);
}

QuantityResult holevo_capacity(const Channel& t, const OptimizerOptions& opts) {
  opts.validate();
  const int m = opts.ensemble_size.value_or(t.d_in() * t.d_in());
  const auto runs = optim::run_indexed<RestartOutcome>(
      opts.restarts, [&](int r) { return holevo_restart(t, m, opts, r); });
  const int best = pick_best(runs, [](double a, double b) { return a > b; });
  return assemble(runs, best, BoundKind::LowerBound);
}

QuantityResult convex_closure_output_entropy(const Channel& t, const DensityMatrix& rho,
                                             const OptimizerOptions& opts) {
  opts.validate();
  check_input_dim(t, rho, "convex_closure_output_entropy");
  const Purification factor = spectral_factor(rho);
  const int r = static_cast<int>(factor.w.cols());
  const int m = std::max(opts.decomposition_size.value_or(r * r), r);

  auto task = [&](int restart) {
    RestartOutcome out;
    ComplexMatrix u;
    bool converged = true;
    if (r == 1) {
      u = ComplexMatrix::Ones(1, 1);  // a pure state has a single decomposition
    } else {
      const ComplexMatrix u0 =
          random_haar_unitary(m, restart_seed(opts, restart)).leftCols(r);
      const RoofObjective objective{t, factor.w};
      optim::StiefelOutcome o = optim::stiefel_minimize(objective, u0, settings_of(opts));
      u = std::move(o.u);
      converged = o.converged;
    }
    Ensemble e = roof_ensemble(factor.w, u, rho.dims());
    out.value = average_output_entropy(t, e);
    out.converged = converged;
    out.witness = std::move(e);
    return out;
  };
  const int restarts = r == 1 ? 1 : opts.restarts;
  const auto runs = optim::run_indexed<RestartOutcome>(restarts, task);
  const int best = pick_best(runs, [](double a, double b) { return a < b; });
  return assemble(runs, best, BoundKind::UpperBound);
}

QuantityResult constrained_holevo(const Channel& t, const DensityMatrix& rho,
                                  const OptimizerOptions& opts) {
  QuantityResult h = convex_closure_output_entropy(t, rho, opts);
  const double output = entropy_of(t.apply(rho.mat()));
  h.value = output - h.value;
  h.witness_value = h.value;
  h.bound_kind = BoundKind::LowerBound;
  return h;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("concurrence: state is not two-qubit");
  ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const ComplexMatrix flipped = yy * rho.mat().conjugate() * yy;
  const Spectrum s = hermitian_spectrum(rho.mat(), 1e-10);
  const ComplexMatrix root =
      hermitian_function(s, [](double x) { return std::sqrt(std::max(x, 0.0)); });
  ComplexMatrix r = root * flipped * root;
  r = 0.5 * (r + r.adjoint()).eval();
  const RealVector ev = hermitian_spectrum(r, 1e-8).values.cwiseMax(0.0).cwiseSqrt();
  return std::max(0.0, ev[0] - ev[1] - ev[2] - ev[3]);
}

double eof_from_concurrence(double c) {
  const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  return shannon_entropy(ProbDist::normalized({x, 1.0 - x}));
}

QuantityResult eof(const DensityMatrix& rho, const OptimizerOptions& opts) {
  if (rho.dims().size() != 2) throw std::invalid_argument("eof: state must be bipartite (dims = {dA, dB})");
  const int da = rho.dims()[0];
  const int db = rho.dims()[1];
  QuantityResult r =
      convex_closure_output_entropy(partial_trace_channel(da, db, Traced::B), rho, opts);
  if (da == 2 && db == 2) {
    const double closed = eof_from_concurrence(concurrence(rho));
    r.value = std::min(r.value, closed);
    r.bound_kind = BoundKind::ExactClosedForm;
  }
  return r;
}

BlockWeights optimal_block_weights(std::span<const double> c) {
  if (c.empty()) throw std::invalid_argument("optimal_block_weights: empty list");
  const double top = *std::max_element(c.begin(), c.end());
  std::vector<double> w(c.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    w[i] = std::exp2(c[i] - top);
    sum += w[i];
  }
  BlockWeights out;
  out.value = top + std::log2(sum);
  out.weights = ProbDist::normalized(std::move(w));
  return out;
}

double block_weight_objective(const ProbDist& lambda, std::span<const double> c) {
  if (lambda.size() != c.size()) throw std::invalid_argument("block_weight_objective: length mismatch");
  double v = shannon_entropy(lambda);
  for (std::size_t i = 0; i < c.size(); ++i) v += lambda[i] * c[i];
  return v;
}

double hsw_smin_gap(const Channel& t, const OptimizerOptions& opts) {
  const double smin = min_output_renyi(t, RenyiOrder(1.0), opts).value;
  const double chi = holevo_capacity(t, opts).value;
  return std::log2(static_cast<double>(t.d_out())) - smin - chi;
}

}  // namespace sumcap

#include "sumcap/harness.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace sumcap {

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CheckReport make_report(std::string name, std::vector<std::string> inputs, Sidedness s,
                        double tol, const OptimizerOptions& opts) {
  CheckReport r;
  r.check_name = std::move(name);
  r.inputs = std::move(inputs);
  r.sidedness = s;
  r.tolerance = tol;
  r.options = opts;
  return r;
}

std::string describe(const DensityMatrix& rho) {
  std::string dims;
  for (int d : rho.dims()) dims += (dims.empty() ? "" : "x") + std::to_string(d);
  return "state(" + dims + ")";
}

ComplexVector embed_vector(const ComplexVector& v, int offset, int total) {
  ComplexVector out = ComplexVector::Zero(total);
  out.segment(offset, v.size()) = v;
  return out;
}

ComplexMatrix embed_matrix(const ComplexMatrix& m, int offset, int total) {
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  out.block(offset, offset, m.rows(), m.cols()) = m;
  return out;
}

double log2_sum_exp2(std::initializer_list<double> c) {
  const std::vector<double> v(c);
  return optimal_block_weights(v).value;
}

const Ensemble& as_ensemble(const QuantityResult& r) { return std::get<Ensemble>(r.witness); }

// Input dims of the channel (T1 + T2) x (T1 + T2) read as pairs of blocks.
struct SectorLayout {
  std::vector<int> offsets;
  int total = 0;
};

SectorLayout layout(std::initializer_list<int> dims) {
  SectorLayout l;
  for (int d : dims) {
    l.offsets.push_back(l.total);
    l.total += d;
  }
  return l;
}

}  // namespace

std::string to_string(Sidedness s) {
  switch (s) {
    case Sidedness::TwoSided: return "two-sided";
    case Sidedness::LhsAtMostRhs: return "lhs<=rhs";
    case Sidedness::LhsAtLeastRhs: return "lhs>=rhs";
    case Sidedness::Finding: return "finding";
  }
  return "unknown";
}

bool within(double lhs, double rhs, double tol, Sidedness s) {
  switch (s) {
    case Sidedness::LhsAtMostRhs: return lhs <= rhs + tol;
    case Sidedness::LhsAtLeastRhs: return lhs >= rhs - tol;
    default: return std::abs(lhs - rhs) <= tol;
  }
}

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::MinOutputEntropy: return "smin";
    case Quantity::Coherent: return "coherent";
    case Quantity::Mutual: return "mutual";
    case Quantity::Holevo: return "chi";
  }
  return "unknown";
}

Quantity quantity_from_string(const std::string& name) {
  if (name == "smin") return Quantity::MinOutputEntropy;
  if (name == "coherent") return Quantity::Coherent;
  if (name == "mutual") return Quantity::Mutual;
  if (name == "chi") return Quantity::Holevo;
  throw std::invalid_argument("unknown quantity \"" + name + "\" (expected smin, coherent, mutual, chi)");
}

// ---------------------------------------------------------------------------

CheckReport check_direct_sum_smin(const Channel& t1, const Channel& t2, const RenyiOrder& alpha,
                                  const OptimizerOptions& opts, double tol) {
  const Stopwatch clock;
  CheckReport r = make_report("smin-dsum", {t1.label(), t2.label()}, Sidedness::TwoSided, tol, opts);
  const double s1 = min_output_renyi(t1, alpha, opts).value;
  const double s2 = min_output_renyi(t2, alpha, opts).value;
  r.lhs = min_output_renyi(direct_sum(t1, t2), alpha, opts).value;
  r.rhs = std::min(s1, s2);
  r.details = {{"part1", s1}, {"part2", s2}, {"alpha", alpha.is_infinite() ? INFINITY : alpha.value()}};
  r.passed = within(r.lhs, r.rhs, tol, r.sidedness);
  r.note = "alpha=" + alpha.to_string();
  r.wall_time = clock.seconds();
  return r;
}

CheckReport check_direct_sum_coherent(const Channel& t1, const Channel& t2,
                                      const OptimizerOptions& opts, double tol) {
  const Stopwatch clock;
  CheckReport r = make_report("coherent-dsum", {t1.label(), t2.label()}, Sidedness::TwoSided, tol, opts);
  const double j1 = coherent_information(t1, opts).value;
  const double j2 = coherent_information(t2, opts).value;
  r.lhs = coherent_information(direct_sum(t1, t2), opts).value;
  r.rhs = std::max(j1, j2);
  r.details = {{"part1", j1}, {"part2", j2}};
  r.passed = within(r.lhs, r.rhs, tol, r.sidedness);
  r.wall_time = clock.seconds();
  return r;
}

CheckReport check_direct_sum_mutual(const Channel& t1, const Channel& t2,
                                    const OptimizerOptions& opts, double tol) {
  const Stopwatch clock;
  CheckReport r = make_report("mutual-dsum", {t1.label(), t2.label()}, Sidedness::TwoSided, tol, opts);
  const std::vector<double> c{mutual_information(t1, opts).value, mutual_information(t2, opts).value};
  const BlockWeights w = optimal_block_weights(c);
  r.lhs = mutual_information(direct_sum(t1, t2), opts).value;
  r.rhs = w.value;
  const double weight_form = block_weight_objective(w.weights, c);
  r.details = {{"part1", c[0]}, {"part2", c[1]}, {"weight_form", weight_form},
               {"lambda1", w.weights[0]}, {"lambda2", w.weights[1]}};
  r.passed = within(r.lhs, r.rhs, tol, r.sidedness) &&
             std::abs(weight_form - r.rhs) <= tolerance::kAlgebraic;
  r.wall_time = clock.seconds();
  return r;
}

CheckReport check_direct_sum_holevo(const Channel& t1, const Channel& t2,
                                    const OptimizerOptions& opts, double tol) {
  const Stopwatch clock;
  CheckReport r = make_report("chi-dsum", {t1.label(), t2.label()}, Sidedness::TwoSided, tol, opts);
  const std::vector<double> c{holevo_capacity(t1, opts).value, holevo_capacity(t2, opts).value};
  const BlockWeights w = optimal_block_weights(c);
  r.lhs = holevo_capacity(direct_sum(t1, t2), opts).value;
  r.rhs = w.value;
  const double weight_form = block_weight_objective(w.weights, c);
  r.details = {{"part1", c[0]}, {"part2", c[1]}, {"weight_form", weight_form},
               {"lambda1", w.weights[0]}, {"lambda2", w.weights[1]}};
  r.passed = within(r.lhs, r.rhs, tol, r.sidedness) &&
             std::abs(weight_form - r.rhs) <= tolerance::kAlgebraic;
  r.wall_time = clock.seconds();
  return r;
}

CheckReport check_direct_sum_feasibility(const Channel& t1, const Channel& t2, Quantity q,
                                         const RenyiOrder& alpha, const OptimizerOptions& opts,
                                         double tol) {
  const Stopwatch clock;
  const bool minimize = q == Quantity::MinOutputEntropy;
  CheckReport r = make_report("dsum-feasibility", {t1.label(), t2.label()},
                              minimize ? Sidedness::LhsAtMostRhs : Sidedness::LhsAtLeastRhs, tol, opts);
  r.note = "quantity=" + to_string(q) + (minimize ? " alpha=" + alpha.to_string() : "");
  const Channel sum = direct_sum(t1, t2);
  const int total = sum.d_in();
  const int offsets[2] = {0, t1.d_in()};
  double numeric = 0.0;
  double constructed = 0.0;
  switch (q) {
    case Quantity::MinOutputEntropy: {
      QuantityResult p[2] = {min_output_renyi(t1, alpha, opts), min_output_renyi(t2, alpha, opts)};
      const int best = p[1].value < p[0].value ? 1 : 0;
      const PureState embedded(embed_vector(std::get<PureState>(p[best].witness).vec(), offsets[best], total));
      constructed = output_renyi(sum, embedded, alpha);
      numeric = min_output_renyi(sum, alpha, opts).value;
      r.rhs = std::min(p[0].value, p[1].value);
      r.lhs = std::min(numeric, constructed);
      break;
    }
    case Quantity::Coherent: {
      QuantityResult p[2] = {coherent_information(t1, opts), coherent_information(t2, opts)};
      const int best = p[1].value > p[0].value ? 1 : 0;
      const DensityMatrix embedded(
          embed_matrix(std::get<DensityMatrix>(p[best].witness).mat(), offsets[best], total));
      constructed = coherent_objective(sum, embedded);
      numeric = coherent_information(sum, opts).value;
      r.rhs = std::max(p[0].value, p[1].value);
      r.lhs = std::max(numeric, constructed);
      break;
    }
    case Quantity::Mutual: {
      QuantityResult p[2] = {mutual_information(t1, opts), mutual_information(t2, opts)};
      const std::vector<double> c{p[0].value, p[1].value};
      const BlockWeights w = optimal_block_weights(c);
      ComplexMatrix mixed = ComplexMatrix::Zero(total, total);
      for (int i = 0; i < 2; ++i)
        mixed += w.weights[i] * embed_matrix(std::get<DensityMatrix>(p[i].witness).mat(), offsets[i], total);
      constructed = mutual_objective(sum, DensityMatrix(mixed));
      numeric = mutual_information(sum, opts).value;
      r.rhs = w.value;
      r.lhs = std::max(numeric, constructed);
      break;
    }
    case Quantity::Holevo: {
      QuantityResult p[2] = {holevo_capacity(t1, opts), holevo_capacity(t2, opts)};
      const std::vector<double> c{p[0].value, p[1].value};
      const BlockWeights w = optimal_block_weights(c);
      std::vector<double> probs;
      std::vector<DensityMatrix> states;
      for (int i = 0; i < 2; ++i) {
        const Ensemble& e = as_ensemble(p[i]);
        for (std::size_t k = 0; k < e.size(); ++k) {
          probs.push_back(w.weights[i] * e.probs()[k]);
          states.emplace_back(embed_matrix(e.states()[k].mat(), offsets[i], total));
        }
      }
      constructed = holevo_quantity(sum, Ensemble(ProbDist::normalized(std::move(probs)), std::move(states)));
      numeric = holevo_capacity(sum, opts).value;
      r.rhs = w.value;
      r.lhs = std::max(numeric, constructed);
      break;
    }
  }
  r.details = {{"optimizer", numeric}, {"constructed", constructed}};
  r.passed = within(r.lhs, r.rhs, tol, r.sidedness);
  r.wall_time = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------

CheckReport check_tensor_distributes(const Channel& t1, const Channel& t2, const Channel& t3,
                                     const Channel& t4, double tol) {
  const Stopwatch clock;
  CheckReport r = make_report("tensor-distributes", {t1.label(), t2.label(), t3.label(), t4.label()},
                              Sidedness::TwoSided, tol, {});
  const ComplexMatrix big = choi(tensor(direct_sum(t1, t2), direct_sum(t3, t4))).mat();

  const Channel* first[2] = {&t1, &t2};
  const Channel* second[2] = {&t3, &t4};
  const SectorLayout in1 = layout({t1.d_in(), t2.d_in()});
  const SectorLayout out1 = layout({t1.d_out(), t2.d_out()});
  const SectorLayout in2 = layout({t3.d_in(), t4.d_in()});
  const SectorLayout out2 = layout({t3.d_out(), t4.d_out()});
  const int din = in1.total * in2.total;

  ComplexMatrix expected = ComplexMatrix::Zero(big.rows(), big.cols());
  for (int b1 = 0; b1 < 2; ++b1)
    for (int b2 = 0; b2 < 2; ++b2) {
      const Channel& a = *first[b1];
      const Channel& b = *second[b2];
      const ComplexMatrix sector = choi(tensor(a, b)).mat();
      const int sector_in = a.d_in() * b.d_in();
      // Sector index (o1 o2)(i1 i2) -> big index (O1 O2)(I1 I2).
      auto place = [&](int idx) {
        const int out = idx / sector_in;
        const int in = idx % sector_in;
        const int o1 = out / b.d_out(), o2 = out % b.d_out();
        const int i1 = in / b.d_in(), i2 = in % b.d_in();
        const int big_out = (out1.offsets[b1] + o1) * out2.total + out2.offsets[b2] + o2;
        const int big_in = (in1.offsets[b1] + i1) * in2.total + in2.offsets[b2] + i2;
        return big_out * din + big_in;
      };
      for (Eigen::Index x = 0; x < sector.rows(); ++x) {
        const int px = place(static_cast<int>(x));
        for (Eigen::Index y = 0; y < sector.cols(); ++y) expected(px, place(static_cast<int>(y))) = sector(x, y);
      }
    }
  r.lhs = max_abs(big - expected);
  r.rhs = 0.0;
  r.details = {{"choi_dim", static_cast<double>(big.rows())}};
  r.passed = within(r.lhs, r.rhs, tol, r.sidedness);
  r.wall_time = clock.seconds();
  return r;
}

EqualizedPair equalize_smin(const Channel& t1, const Channel& t2, const RenyiOrder& alpha,
                            const OptimizerOptions& opts, double tol) {
  const Stopwatch clock;
  CheckReport r = make_report("equalize-smin", {t1.label(), t2.label()}, Sidedness::TwoSided, tol, opts);
  const QuantityResult p1 = min_output_renyi(t1, alpha, opts);
  const QuantityResult p2 = min_output_renyi(t2, alpha, opts);
  const DensityMatrix sigma1(t1.apply_pure(std::get<PureState>(p1.witness).vec()));
  const DensityMatrix sigma2(t2.apply_pure(std::get<PureState>(p2.witness).vec()));
  Channel t1p = pad_output(t1, sigma2);
  Channel t2p = pad_output(t2, sigma1);
  const double v1 = min_output_renyi(t1p, alpha, opts).value;
  const double v2 = min_output_renyi(t2p, alpha, opts).value;
  r.lhs = v1;
  r.rhs = p1.value + p2.value;
  r.details = {{"part1", p1.value}, {"part2", p2.value}, {"padded1", v1}, {"padded2", v2}};
  r.passed = within(v1, r.rhs, tol, r.sidedness) && within(v2, r.rhs, tol, r.sidedness);
  r.note = "alpha=" + alpha.to_string();
  r.wall_time = clock.seconds();
  return {std::move(t1p), std::move(t2p), std::move(r)};
}

CheckReport check_chi_expansion(const Channel& t1, const Channel& t2, const OptimizerOptions& opts,
                                double tol) {
  const Stopwatch clock;
  CheckReport r = make_report("chi-expansion", {t1.label(), t2.label()}, Sidedness::TwoSided, tol, opts);
  const Channel sum = direct_sum(t1, t2);
  const Channel square = tensor(sum, sum);
  OptimizerOptions big = opts;
  if (!big.ensemble_size) big.ensemble_size = square.d_out();
  r.options = big;

  const double c1 = holevo_capacity(t1, opts).value;
  const double c2 = holevo_capacity(t2, opts).value;
  const double c11 = holevo_capacity(tensor(t1, t1), opts).value;
  const double c22 = holevo_capacity(tensor(t2, t2), opts).value;
  const double c12 = holevo_capacity(tensor(t1, t2), opts).value;
  r.lhs = holevo_capacity(square, big).value;
  r.rhs = log2_sum_exp2({2 * c1, 2 * c2, c1 + c2 + 1});
  const double sector_form = log2_sum_exp2({c11, c22, c12 + 1});
  r.details = {{"chi1", c1}, {"chi2", c2}, {"chi11", c11}, {"chi22", c22}, {"chi12", c12},
               {"sector_form", sector_form}};
  r.passed = within(r.lhs, r.rhs, tol, r.sidedness) && within(sector_form, r.rhs, tol, r.sidedness);
  r.wall_time = clock.seconds();
  return r;
}

int sector_index(int d1, int d2, int i, int j) { return i * (d1 + d2) + d1 + j; }

CheckReport check_superadditivity_embedding(const Channel& t1, const Channel& t2,
                                            const DensityMatrix& rho, const OptimizerOptions& opts,
                                            double tol) {
  const Stopwatch clock;
  const int d1 = t1.d_in();
  const int d2 = t2.d_in();
  if (rho.dim() != d1 * d2)
    throw std::invalid_argument("check_superadditivity_embedding: state dimension must be d_in(T1) * d_in(T2)");
  CheckReport r = make_report("superadditivity-embedding", {t1.label(), t2.label(), describe(rho)},
                              Sidedness::TwoSided, tol, opts);
  const Channel sum = direct_sum(t1, t2);
  const Channel square = tensor(sum, sum);
  const int n = (d1 + d2) * (d1 + d2);
  ComplexMatrix embedded = ComplexMatrix::Zero(n, n);
  for (int a = 0; a < d1 * d2; ++a)
    for (int b = 0; b < d1 * d2; ++b)
      embedded(sector_index(d1, d2, a / d2, a % d2), sector_index(d1, d2, b / d2, b % d2)) = rho.mat()(a, b);

  const DensityMatrix local = rho.with_dims({d1, d2});
  r.lhs = convex_closure_output_entropy(square, DensityMatrix(embedded), opts).value;
  r.rhs = convex_closure_output_entropy(tensor(t1, t2), local, opts).value;
  const std::vector<int> dims{d1, d2};
  const std::vector<int> keep1{0}, keep2{1};
  const DensityMatrix rho1(partial_trace(local.mat(), dims, keep1));
  const DensityMatrix rho2(partial_trace(local.mat(), dims, keep2));
  const double h1 = convex_closure_output_entropy(t1, rho1, opts).value;
  const double h2 = convex_closure_output_entropy(t2, rho2, opts).value;
  r.details = {{"h1", h1}, {"h2", h2}, {"chain_rhs", h1 + h2}};
  r.passed = within(r.lhs, r.rhs, tol, r.sidedness) && r.rhs >= h1 + h2 - tol;
  r.wall_time = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------

DensityMatrix block_embedding(const std::vector<DensityMatrix>& states, const ProbDist& weights) {
  if (states.empty() || states.size() != weights.size())
    throw std::invalid_argument("block_embedding: states and weights differ in length");
  std::vector<int> a_off, b_off;
  int da = 0, db = 0;
  for (const auto& s : states) {
    if (s.dims().size() != 2) throw std::invalid_argument("block_embedding: states must be bipartite");
    a_off.push_back(da);
    b_off.push_back(db);
    da += s.dims()[0];
    db += s.dims()[1];
  }
  ComplexMatrix m = ComplexMatrix::Zero(da * db, da * db);
  for (std::size_t k = 0; k < states.size(); ++k) {
    const int ak = states[k].dims()[0], bk = states[k].dims()[1];
    auto place = [&](int idx) { return (a_off[k] + idx / bk) * db + b_off[k] + idx % bk; };
    for (int x = 0; x < ak * bk; ++x)
      for (int y = 0; y < ak * bk; ++y) m(place(x), place(y)) += weights[k] * states[k].mat()(x, y);
  }
  return DensityMatrix(std::move(m), {da, db});
}

DensityMatrix bipartite_tensor(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dims().size() != 2 || sigma.dims().size() != 2)
    throw std::invalid_argument("bipartite_tensor: states must be bipartite");
  const std::vector<int> dims{rho.dims()[0], rho.dims()[1], sigma.dims()[0], sigma.dims()[1]};
  const std::vector<int> perm{0, 2, 1, 3};
  ComplexMatrix m = permute_subsystems(kron(rho.mat(), sigma.mat()), dims, perm);
  return DensityMatrix(std::move(m), {dims[0] * dims[2], dims[1] * dims[3]});
}

CheckReport check_monotone_affinity(const std::vector<DensityMatrix>& states, const ProbDist& weights,
                                    const OptimizerOptions& opts, double tol) {
  const Stopwatch clock;
  std::vector<std::string> inputs;
  for (const auto& s : states) inputs.push_back(describe(s));
  CheckReport r = make_report("monotone-affinity", inputs, Sidedness::TwoSided, tol, opts);
  r.lhs = eof(block_embedding(states, weights), opts).value;
  r.rhs = 0.0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    const double e = eof(states[k], opts).value;
    r.details["block" + std::to_string(k + 1)] = e;
    r.rhs += weights[k] * e;
  }
  r.passed = within(r.lhs, r.rhs, tol, r.sidedness);
  r.wall_time = clock.seconds();
  return r;
}

CheckReport check_weak_to_strong_monotone(const DensityMatrix& rho1, const DensityMatrix& rho2,
                                          const OptimizerOptions& opts, double tol) {
  const Stopwatch clock;
  CheckReport r = make_report("weak-strong-monotone", {describe(rho1), describe(rho2)},
                              Sidedness::TwoSided, tol, opts);
  const DensityMatrix rho = block_embedding({rho1, rho2}, ProbDist::uniform(2));
  const double f = eof(rho, opts).value;
  const double f1 = eof(rho1, opts).value;
  const double f2 = eof(rho2, opts).value;
  const DensityMatrix* parts[2] = {&rho1, &rho2};
  double quarter = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double e = eof(bipartite_tensor(*parts[i], *parts[j]), opts).value;
      r.details["pair" + std::to_string(i + 1) + std::to_string(j + 1)] = e;
      quarter += 0.25 * e;
    }
  r.lhs = eof(bipartite_tensor(rho, rho), opts).value;
  r.rhs = 2.0 * f;
  r.details["single"] = f;
  r.details["affine_single"] = 0.5 * (f1 + f2);
  r.details["quarter_sum"] = quarter;
  r.passed = within(r.lhs, r.rhs, tol, r.sidedness) && within(r.lhs, quarter, tol, r.sidedness) &&
             within(f, 0.5 * (f1 + f2), tol, r.sidedness);
  r.wall_time = clock.seconds();
  return r;
}

// ---------------------------------------------------------------------------

double wh_two_copy_exact(double p) {
  if (p == 1.0) return -(std::log2(1.0 / 3.0) / 3.0 + 8.0 / 12.0 * std::log2(1.0 / 12.0));
  return -std::log2(std::pow(3.0, -p) + 8.0 * std::pow(12.0, -p)) / (p - 1.0);
}

CheckReport wh_counterexample(double p, const OptimizerOptions& opts, bool confirm, double tol) {
  const Stopwatch clock;
  const RenyiOrder order(p);
  CheckReport r = make_report("wh", {"werner_holevo(3)"}, Sidedness::Finding, tol, opts);
  r.note = "p=" + order.to_string();
  const Channel phi = werner_holevo(3);
  const Channel two = tensor(phi, phi);
  ComplexVector omega = ComplexVector::Zero(9);
  for (int i = 0; i < 3; ++i) omega[i * 3 + i] = 1.0 / std::sqrt(3.0);
  r.lhs = output_renyi(two, PureState(omega), order);
  r.rhs = 2.0;  // every pure input of Phi gives spectrum {1/2, 1/2, 0}
  const double exact = wh_two_copy_exact(p);
  const bool violation = r.lhs < r.rhs - tol;
  r.details = {{"p", p}, {"exact", exact}, {"violation", violation ? 1.0 : 0.0}};
  bool consistent = std::abs(r.lhs - exact) <= 1e-10;
  if (confirm) {
    const double single = min_output_renyi(phi, order, opts).value;
    const double pair = min_output_renyi(two, order, opts).value;
    r.details["single_copy_optimizer"] = single;
    r.details["two_copy_optimizer"] = pair;
    consistent = consistent && std::abs(single - 1.0) <= 1e-6 && pair <= r.lhs + 1e-6;
  }
  r.passed = consistent;
  r.wall_time = clock.seconds();
  return r;
}

CheckReport check_hsw_gap(const Channel& t, bool expect_equality, const OptimizerOptions& opts,
                          double tol) {
  const Stopwatch clock;
  CheckReport r = make_report("hsw-gap", {t.label()},
                              expect_equality ? Sidedness::TwoSided : Sidedness::LhsAtLeastRhs, tol, opts);
  const double smin = min_output_renyi(t, RenyiOrder(1.0), opts).value;
  r.lhs = std::log2(static_cast<double>(t.d_out())) - smin;
  r.rhs = holevo_capacity(t, opts).value;
  r.details = {{"smin", smin}, {"gap", r.lhs - r.rhs}};
  r.passed = within(r.lhs, r.rhs, tol, r.sidedness);
  r.wall_time = clock.seconds();
  return r;
}

}  // namespace sumcap

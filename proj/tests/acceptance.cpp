// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include "sumcap/cli.hpp"
#include "sumcap/suite.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace sumcap;

namespace {

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  // Records one measured value; prints it and remembers failures.
  void expect(bool ok, const std::string& what) {
    std::printf("    %s %s\n", ok ? "ok  " : "FAIL", what.c_str());
    ok_ = ok_ && ok;
    ++checks_;
  }
  void near(const std::string& what, double got, double want, double tol) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s = %.6f (expected %.6f +- %.0e)", what.c_str(), got, want, tol);
    expect(std::abs(got - want) <= tol, buf);
  }
  void report(const CheckReport& r, const std::string& what) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: lhs %.6f rhs %.6f tol %.0e", what.c_str(), r.lhs, r.rhs, r.tolerance);
    expect(r.passed, buf);
  }
  // Aggregates many reports into one line.
  void tally(const std::vector<CheckReport>& rs, const std::string& what) {
    std::size_t passed = 0;
    double worst = 0.0;
    for (const auto& r : rs) {
      if (r.passed) ++passed;
      else std::printf("      failed: %s %s lhs %.8f rhs %.8f %s\n", r.check_name.c_str(),
                       r.inputs.empty() ? "" : (r.inputs[0] + " / " + r.inputs.back()).c_str(), r.lhs, r.rhs,
                       r.note.c_str());
      if (r.sidedness == Sidedness::TwoSided) worst = std::max(worst, std::abs(r.lhs - r.rhs));
    }
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: %zu/%zu passed (largest two-sided deviation %.2e)", what.c_str(), passed,
                  rs.size(), worst);
    expect(passed == rs.size(), buf);
  }

  bool finish(int index, double seconds) const {
    std::printf("criterion %d %s  %s  [%zu checks, %.1f s]\n", index, ok_ ? "PASS" : "FAIL", title_.c_str(),
                checks_, seconds);
    std::fflush(stdout);
    return ok_;
  }

 private:
  std::string title_;
  bool ok_ = true;
  std::size_t checks_ = 0;
};

double since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

OptimizerOptions opts(int restarts, std::uint64_t seed = 0) {
  OptimizerOptions o;
  o.restarts = restarts;
  o.seed = seed;
  return o;
}

DensityMatrix bell() {
  ComplexVector b = ComplexVector::Zero(4);
  b[0] = b[3] = 1.0 / std::sqrt(2.0);
  return DensityMatrix(b * b.adjoint(), {2, 2});
}

DensityMatrix werner(double f) {
  const ComplexMatrix p = bell().mat();
  return DensityMatrix(f * p + (1 - f) / 3 * (ComplexMatrix::Identity(4, 4) - p), {2, 2});
}

DensityMatrix product() { return DensityMatrix::from_pure(PureState::basis(4, 0)).with_dims({2, 2}); }

// --- criteria ---------------------------------------------------------------------

bool closed_forms(int index) {
  const auto start = std::chrono::steady_clock::now();
  Criterion c("closed-form quantity reproduction");
  const OptimizerOptions o = opts(8);
  const Channel depol = depolarizing(2, 0.5);
  c.near("S_min(depolarizing(2,0.5))", min_output_renyi(depol, RenyiOrder(1.0), o).value, 0.811278, 1e-4);
  c.near("chi(depolarizing(2,0.5))", holevo_capacity(depol, o).value, 0.188722, 1e-3);
  c.near("I(id2)", mutual_information(identity_channel(2), o).value, 2.0, 1e-4);
  c.near("J(id2)", coherent_information(identity_channel(2), o).value, 1.0, 1e-4);
  const QuantityResult eb = eof(bell(), o);
  c.near("E_F(Bell) roof optimizer", eb.witness_value, 1.0, 1e-6);
  c.near("E_F(Bell) concurrence", eof_from_concurrence(concurrence(bell())), 1.0, 1e-6);
  const QuantityResult ew = eof(werner(0.75), o);
  c.near("E_F(Werner 3/4) reported", ew.value, 0.35458, 1e-3);
  c.near("E_F(Werner 3/4) roof optimizer", ew.witness_value, 0.35458, 1e-3);
  const double seconds = since(start);
  c.expect(seconds < 5.0, "runtime " + std::to_string(seconds) + " s < 5 s");
  return c.finish(index, seconds);
}

bool direct_sum_identities(int index) {
  const auto start = std::chrono::steady_clock::now();
  Criterion c("direct-sum identities on random qubit pairs, one-sided feasibility on 50 more");
  const OptimizerOptions o = opts(8);
  std::vector<CheckReport> smin, coherent, mutual, chi;
  for (int k = 0; k < 20; ++k) {
    const Channel t1 = random_channel(2, 2, 2 + k % 2, 1000 + 2 * k);
    const Channel t2 = random_channel(2, 2, 2 + (k / 2) % 3, 1001 + 2 * k);
    for (const RenyiOrder& a : {RenyiOrder(1.0), RenyiOrder(2.0), RenyiOrder::infinity()})
      smin.push_back(check_direct_sum_smin(t1, t2, a, o, 1e-3));
    coherent.push_back(check_direct_sum_coherent(t1, t2, o, 5e-3));
    mutual.push_back(check_direct_sum_mutual(t1, t2, o, 1e-3));
    chi.push_back(check_direct_sum_holevo(t1, t2, o, 5e-3));
  }
  c.tally(smin, "S_min,alpha of sum = min of parts, alpha in {1,2,inf}");
  c.tally(coherent, "J of sum = max of parts");
  c.tally(mutual, "I of sum = log2 sum 2^I_i");
  c.tally(chi, "chi of sum = log2 sum 2^chi_i");

  const OptimizerOptions light = opts(4);
  std::vector<CheckReport> feasible;
  const int shapes[][2] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {1, 2}};
  for (int k = 0; k < 50; ++k) {
    const auto* s1 = shapes[k % 5];
    const auto* s2 = shapes[(k / 5) % 5];
    const Channel t1 = random_channel(s1[0], s1[1], 2, 5000 + 2 * k);
    const Channel t2 = random_channel(s2[0], s2[1], 3, 5001 + 2 * k);
    for (Quantity q : {Quantity::MinOutputEntropy, Quantity::Coherent, Quantity::Mutual, Quantity::Holevo})
      feasible.push_back(check_direct_sum_feasibility(t1, t2, q, RenyiOrder(1.0), light, 1e-6));
  }
  c.tally(feasible, "one-sided feasibility (S_min, J, I, chi)");
  const double seconds = since(start);
  c.expect(seconds < 900.0, "runtime " + std::to_string(seconds) + " s <= 15 min");
  return c.finish(index, seconds);
}

bool direct_sum_chi_example(int index) {
  const auto start = std::chrono::steady_clock::now();
  Criterion c("numeric chi on the 4-dim sum channel id2 + depolarizing(2,0.5)");
  const QuantityResult r = holevo_capacity(direct_sum(identity_channel(2), depolarizing(2, 0.5)), opts(32));
  c.near("chi(id2 + depolarizing(2,0.5))", r.value, 1.650662, 5e-3);
  return c.finish(index, since(start));
}

bool reduction_machinery(int index) {
  const auto start = std::chrono::steady_clock::now();
  Criterion c("tensor distribution, padding, chi block expansion");
  std::vector<CheckReport> dist;
  for (int k = 0; k < 20; ++k) {
    const int d = 1 + k % 3;
    dist.push_back(check_tensor_distributes(random_channel(2, d, 2, 100 + 4 * k), random_channel(d, 2, 2, 101 + 4 * k),
                                            random_channel(2, 2, 1 + k % 2, 102 + 4 * k),
                                            random_channel(1 + (k + 1) % 3, 2, 2, 103 + 4 * k), 1e-10));
  }
  c.tally(dist, "Choi of (T1+T2)x(T3+T4) vs sector placement");

  std::vector<CheckReport> pads;
  pads.push_back(equalize_smin(identity_channel(2), depolarizing(2, 0.5), RenyiOrder(1.0), opts(8)).report);
  pads.push_back(equalize_smin(identity_channel(2), identity_channel(2), RenyiOrder(1.0), opts(8)).report);
  for (int k = 0; k < 4; ++k)
    pads.push_back(equalize_smin(random_channel(2, 2, 2, 300 + k), random_channel(2, 3, 2, 310 + k),
                                 k % 2 ? RenyiOrder(2.0) : RenyiOrder(1.0), opts(8), 1e-3)
                       .report);
  c.tally(pads, "padded channels share S_min(T1) + S_min(T2)");

  // Block expansion log2[2^(2c1) + 2^(2c2) + 2^(c1+c2+1)] at c1 = c2 = 1 - h(3/4). The
  // quoted 1.962407 uses a coefficient of 3 instead of 4 in front of 2^(2c).
  const double h = -0.75 * std::log2(0.75) - 0.25 * std::log2(0.25);
  const double depol_expansion = 2.0 + 2.0 * (1.0 - h);
  std::printf("    info depol/depol expansion %.6f differs from quoted 1.962407 by %.6f\n", depol_expansion,
              depol_expansion - 1.962407);
  const OptimizerOptions heavy = opts(4);
  const Channel id = identity_channel(2);
  const Channel constant = constant_channel(DensityMatrix::from_pure(PureState::basis(2, 0)));
  const Channel depol = depolarizing(2, 0.5);
  struct Case {
    const char* name;
    const Channel& t1;
    const Channel& t2;
    double expected;
  } cases[] = {{"id2/id2", id, id, 4.0}, {"id2/constant", id, constant, 3.169925}, {"depol/depol", depol, depol, depol_expansion}};
  for (const auto& k : cases) {
    const CheckReport r = check_chi_expansion(k.t1, k.t2, heavy, 5e-3);
    c.report(r, std::string("chi expansion ") + k.name);
    c.near(std::string("  numeric chi((T1+T2)^2) ") + k.name, r.lhs, k.expected, 5e-3);
    c.near(std::string("  sector form ") + k.name, r.details.at("sector_form"), k.expected, 5e-3);
  }
  return c.finish(index, since(start));
}

bool werner_holevo_counterexample(int index) {
  const auto start = std::chrono::steady_clock::now();
  Criterion c("Werner-Holevo two-copy counterexample");
  const CheckReport five = wh_counterexample(5.0, {}, false);
  const CheckReport two = wh_counterexample(2.0, {}, false);
  const CheckReport above = wh_counterexample(4.9, {}, false);
  const CheckReport below = wh_counterexample(4.7, {}, false);
  const double spectral = since(start);
  // Exact value from the output spectrum {1/3, 1/12 x 8}; the quoted 1.978386 is 1e-5 below it.
  const double exact5 = -0.25 * std::log2(std::pow(3.0, -5) + 8 * std::pow(12.0, -5));
  c.near("p=5 two-copy value vs exact spectrum", five.lhs, exact5, 1e-6);
  std::printf("    info p=5 value differs from quoted 1.978386 by %.2e\n", five.lhs - 1.978386);
  c.expect(five.details.at("violation") == 1.0 && five.lhs < 2.0, "p=5 violates 2 S_min,5 = 2");
  c.near("p=2 two-copy value", two.lhs, std::log2(6.0), 1e-6);
  c.expect(two.details.at("violation") == 0.0, "p=2 no violation from this input");
  c.expect(above.details.at("violation") == 1.0, "violation present at p=4.9");
  c.expect(below.details.at("violation") == 0.0, "violation absent at p=4.7");
  c.expect(spectral < 1.0, "spectral runtime " + std::to_string(spectral) + " s < 1 s");
  const CheckReport confirmed = wh_counterexample(5.0, opts(8), true);
  c.report(confirmed, "optimizer on Phi x Phi reaches at most the maximally entangled value");
  return c.finish(index, since(start));
}

bool monotone_laws(int index) {
  const auto start = std::chrono::steady_clock::now();
  Criterion c("entanglement-monotone affinity and weak-to-strong expansion");
  const OptimizerOptions o = opts(8);
  const CheckReport bb = check_monotone_affinity({bell(), bell()}, ProbDist::uniform(2), o, 1e-3);
  c.report(bb, "affinity Bell + Bell");
  c.near("  E_F of the block state", bb.lhs, 1.0, 1e-3);
  const CheckReport bp = check_monotone_affinity({bell(), product()}, ProbDist::uniform(2), o, 1e-3);
  c.report(bp, "affinity Bell + product");
  c.near("  E_F of the block state", bp.lhs, 0.5, 1e-3);
  const CheckReport ws = check_weak_to_strong_monotone(bell(), product(), opts(4), 1e-3);
  c.report(ws, "E_F(rho x rho) = 2 E_F(rho) = (1/4) sum E_F(rho_i x rho_j), rho = (Bell + product)/2");
  c.near("  E_F(rho)", ws.details.at("single"), 0.5, 1e-3);
  const CheckReport pp = check_weak_to_strong_monotone(product(), product(), opts(2), 1e-3);
  c.report(pp, "same expansion for product + product");
  return c.finish(index, since(start));
}

bool optimizer_hygiene(int index) {
  const auto start = std::chrono::steady_clock::now();
  Criterion c("reproducibility, witness re-evaluation, negative control");

  std::vector<SuiteEntry> entries;
  for (const char* check : {"chi-dsum", "coherent-dsum", "smin-dsum"}) {
    SuiteEntry e;
    e.check = check;
    e.inputs = {"random:2:2:2:7", "random:2:3:2:8"};
    e.options = opts(6, 42);
    entries.push_back(e);
  }
  const std::string first = reports_to_json(run_suite(entries)).dump();
  const std::string second = reports_to_json(run_suite(entries)).dump();
  c.expect(first == second, "identical seeds give byte-identical report JSON");

  std::ostringstream out1, out2, err;
  const std::vector<std::string> args{"compute", "chi", "random:3:2:2:9", "--seed", "3", "--restarts", "6", "--emit-witness"};
  run_cli(args, out1, err);
  run_cli(args, out2, err);
  c.expect(out1.str() == out2.str() && !out1.str().empty(), "identical seeds give byte-identical CLI output");

  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Channel t = random_channel(2 + seed % 2, 2 + (seed + 1) % 2, 2, 700 + seed);
    const OptimizerOptions o = opts(6, seed);
    for (const RenyiOrder& a : {RenyiOrder(1.0), RenyiOrder(3.0), RenyiOrder::infinity()}) {
      const QuantityResult s = min_output_renyi(t, a, o);
      worst = std::max(worst, std::abs(output_renyi(t, std::get<PureState>(s.witness), a) - s.value));
    }
    const QuantityResult chi = holevo_capacity(t, o);
    worst = std::max(worst, std::abs(holevo_quantity(t, std::get<Ensemble>(chi.witness)) - chi.value));
    const QuantityResult j = coherent_information(t, o);
    worst = std::max(worst, std::abs(coherent_objective(t, std::get<DensityMatrix>(j.witness)) - j.value));
    const QuantityResult i = mutual_information(t, o);
    worst = std::max(worst, std::abs(mutual_objective(t, std::get<DensityMatrix>(i.witness)) - i.value));
    const DensityMatrix rho = random_density(t.d_in(), 2, 800 + seed);
    const QuantityResult h = convex_closure_output_entropy(t, rho, o);
    worst = std::max(worst, std::abs(average_output_entropy(t, std::get<Ensemble>(h.witness)) - h.value));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "witness re-evaluation: largest deviation %.2e <= 1e-8", worst);
  c.expect(worst <= 1e-8, buf);

  const auto config = std::filesystem::temp_directory_path() / "sumcap_negative_control.json";
  std::ofstream(config) << R"([{"check": "mutual-dsum", "inputs": ["id2", "id2"], "restarts": 4, "perturb_rhs": 0.25}])";
  std::ostringstream sink;
  const int code = run_cli({"suite", config.string()}, sink, err);
  c.expect(code == kExitCheckFailed, "perturbed identity fails with exit code " + std::to_string(code));
  return c.finish(index, since(start));
}

}  // namespace

int main() {
  const std::vector<std::function<bool(int)>> criteria{
      closed_forms,      direct_sum_identities, direct_sum_chi_example, reduction_machinery,
      werner_holevo_counterexample, monotone_laws,         optimizer_hygiene};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i)
    if (!criteria[i](static_cast<int>(i + 1))) ++failed;
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

#include "oracles.hpp"

#include "sumcap/channel_io.hpp"
#include "sumcap/suite.hpp"

#include <doctest.h>

#include <cmath>

using namespace sumcap;

namespace {

OptimizerOptions quick(int restarts = 8) {
  OptimizerOptions o;
  o.restarts = restarts;
  return o;
}

const double kChiDepol = 1.0 - oracle::h2(0.75);

DensityMatrix bell() { return DensityMatrix(oracle::bell_projector(), {2, 2}); }
DensityMatrix product() { return DensityMatrix::from_pure(PureState::basis(4, 0)).with_dims({2, 2}); }

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("comparison semantics") {
  CHECK(within(1.0, 1.0005, 1e-3, Sidedness::TwoSided));
  CHECK_FALSE(within(1.0, 1.002, 1e-3, Sidedness::TwoSided));
  CHECK(within(0.5, 1.0, 1e-3, Sidedness::LhsAtMostRhs));
  CHECK_FALSE(within(1.5, 1.0, 1e-3, Sidedness::LhsAtMostRhs));
  CHECK(within(1.5, 1.0, 1e-3, Sidedness::LhsAtLeastRhs));
  CHECK_FALSE(within(0.5, 1.0, 1e-3, Sidedness::LhsAtLeastRhs));
}

TEST_CASE("direct sum of minimal output entropies") {
  const CheckReport a = check_direct_sum_smin(identity_channel(2), depolarizing(2, 0.5), RenyiOrder(1.0), quick());
  CHECK(a.passed);
  CHECK(a.lhs == doctest::Approx(0.0).epsilon(1e-9));
  const CheckReport b = check_direct_sum_smin(depolarizing(2, 0.5), depolarizing(2, 0.5), RenyiOrder(1.0), quick());
  CHECK(b.passed);
  CHECK(b.lhs == doctest::Approx(oracle::h2(0.75)).epsilon(1e-6));
  CHECK(b.rhs == doctest::Approx(oracle::h2(0.75)).epsilon(1e-6));
  const CheckReport c = check_direct_sum_smin(random_channel(2, 2, 2, 1), random_channel(2, 2, 3, 2),
                                              RenyiOrder::infinity(), quick());
  CHECK(c.passed);
}

TEST_CASE("direct sum of coherent informations") {
  const CheckReport a = check_direct_sum_coherent(identity_channel(2), depolarizing(2, 0.0), quick());
  CHECK(a.passed);
  CHECK(a.lhs == doctest::Approx(1.0).epsilon(1e-6));
  const CheckReport b = check_direct_sum_coherent(unitary_channel(random_haar_unitary(3, 3)), identity_channel(2), quick());
  CHECK(b.passed);
  CHECK(b.lhs == doctest::Approx(std::log2(3.0)).epsilon(1e-6));
}

TEST_CASE("direct sum of mutual informations") {
  const CheckReport a = check_direct_sum_mutual(identity_channel(2), identity_channel(2), quick());
  CHECK(a.passed);
  CHECK(a.lhs == doctest::Approx(3.0).epsilon(1e-7));
  CHECK(a.rhs == doctest::Approx(oracle::log2_sum_exp2({2, 2})));
  const CheckReport b = check_direct_sum_mutual(identity_channel(2), depolarizing(2, 0.0), quick());
  CHECK(b.passed);
  CHECK(b.lhs == doctest::Approx(2.321928).epsilon(1e-6));
  CHECK(b.details.at("weight_form") == doctest::Approx(b.rhs).epsilon(1e-12));
}

TEST_CASE("direct sum of HSW capacities") {
  const CheckReport a = check_direct_sum_holevo(identity_channel(2), depolarizing(2, 0.5), quick());
  CHECK(a.passed);
  CHECK(std::abs(a.lhs - oracle::log2_sum_exp2({1.0, kChiDepol})) < 5e-3);
  CHECK(std::abs(a.rhs - oracle::log2_sum_exp2({1.0, kChiDepol})) < 1e-4);
  const CheckReport b = check_direct_sum_holevo(identity_channel(2), identity_channel(2), quick());
  CHECK(b.passed);
  CHECK(b.lhs == doctest::Approx(2.0).epsilon(1e-6));
  const DensityMatrix zero = DensityMatrix::from_pure(PureState::basis(2, 0));
  const DensityMatrix one = DensityMatrix::from_pure(PureState::basis(2, 1));
  const CheckReport c = check_direct_sum_holevo(constant_channel(zero), constant_channel(one), quick());
  CHECK(c.passed);
  CHECK(c.lhs == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("one-sided feasibility on rectangular random channels") {
  const Channel t1 = random_channel(2, 3, 2, 31);
  const Channel t2 = random_channel(3, 2, 2, 32);
  for (Quantity q : {Quantity::MinOutputEntropy, Quantity::Coherent, Quantity::Mutual, Quantity::Holevo}) {
    const CheckReport r = check_direct_sum_feasibility(t1, t2, q, RenyiOrder(2.0), quick(4));
    CAPTURE(to_string(q));
    CHECK(r.passed);
    CHECK(r.sidedness == (q == Quantity::MinOutputEntropy ? Sidedness::LhsAtMostRhs : Sidedness::LhsAtLeastRhs));
  }
  CHECK(quantity_from_string("chi") == Quantity::Holevo);
  CHECK_THROWS_AS(quantity_from_string("capacity"), std::invalid_argument);
}

TEST_CASE("tensor product distributes over direct sums") {
  for (std::uint64_t s = 0; s < 3; ++s) {
    const CheckReport r = check_tensor_distributes(random_channel(2, 2, 2, s), random_channel(2, 3, 2, s + 10),
                                                   random_channel(3, 2, 2, s + 20), random_channel(1, 2, 2, s + 30));
    CHECK(r.passed);
    CHECK(r.lhs < 1e-12);
  }
  const Channel id = identity_channel(2);
  const CheckReport r = check_tensor_distributes(id, id, id, id);
  CHECK(r.passed);
  CHECK(r.details.at("choi_dim") == 256.0);
}

TEST_CASE("sector embedding convention") {
  // |i> in block 1 of copy 1, |j> in block 2 of copy 2.
  CHECK(sector_index(2, 3, 0, 0) == 2);
  CHECK(sector_index(2, 3, 1, 2) == 1 * 5 + 2 + 2);
}

TEST_CASE("equalizing minimal output entropies by padding") {
  const EqualizedPair e = equalize_smin(identity_channel(2), depolarizing(2, 0.5), RenyiOrder(1.0), quick());
  CHECK(e.report.passed);
  CHECK(e.report.details.at("padded1") == doctest::Approx(0.811278).epsilon(1e-6));
  CHECK(e.report.details.at("padded2") == doctest::Approx(0.811278).epsilon(1e-6));
  CHECK(e.t1_padded.d_out() == 4);
  const EqualizedPair same = equalize_smin(identity_channel(2), identity_channel(2), RenyiOrder(1.0), quick());
  CHECK(same.report.lhs < 1e-9);
  const EqualizedPair random = equalize_smin(random_channel(2, 2, 3, 40), random_channel(2, 3, 2, 41),
                                             RenyiOrder(2.0), quick());
  CHECK(random.report.passed);
}

TEST_CASE("chi of the doubled direct sum expands over sectors") {
  const DensityMatrix zero = DensityMatrix::from_pure(PureState::basis(2, 0));
  const CheckReport r = check_chi_expansion(identity_channel(2), constant_channel(zero), quick(4));
  CHECK(r.passed);
  CHECK(r.rhs == doctest::Approx(std::log2(9.0)).epsilon(1e-6));
  CHECK(std::abs(r.lhs - std::log2(9.0)) < 5e-3);
}

TEST_CASE("chi block expansion for two depolarizing blocks") {
  // Additive blocks: every sector carries 2 chi, so the total is 2 + 2 chi.
  const CheckReport r = check_chi_expansion(depolarizing(2, 0.5), depolarizing(2, 0.5), quick(1));
  CHECK(r.passed);
  CHECK(std::abs(r.lhs - (2.0 + 2 * kChiDepol)) < 5e-3);
  CHECK(r.details.at("sector_form") == doctest::Approx(2.0 + 2 * kChiDepol).epsilon(1e-6));
}

TEST_CASE("superadditivity embedding") {
  const CheckReport a = check_superadditivity_embedding(dephasing(2), dephasing(2), bell(), quick());
  CHECK(a.passed);
  CHECK(a.lhs == doctest::Approx(1.0).epsilon(1e-6));
  const CheckReport b = check_superadditivity_embedding(identity_channel(2), identity_channel(2), bell(), quick());
  CHECK(b.passed);
  CHECK(b.lhs < 1e-9);
  const Channel trivial = partial_trace_channel(2, 1, Traced::B);
  const CheckReport c = check_superadditivity_embedding(trivial, trivial, DensityMatrix(oracle::werner(0.75), {2, 2}), quick());
  CHECK(c.passed);
  CHECK(c.lhs < 1e-9);
  CHECK_THROWS_AS(check_superadditivity_embedding(dephasing(2), dephasing(3), bell(), quick()), std::invalid_argument);
}

TEST_CASE("block embedding layout") {
  const DensityMatrix rho = block_embedding({bell(), product()}, ProbDist({0.5, 0.5}));
  CHECK(rho.dims() == std::vector<int>{4, 4});
  // Bell block sits on A = {0,1}, B = {0,1}; index (a, b) -> a * 4 + b.
  CHECK(std::abs(rho.mat()(0, 5) - Complex(0.25)) < 1e-15);
  // Product block |00> sits at A = 2, B = 2.
  CHECK(std::abs(rho.mat()(10, 10) - Complex(0.5)) < 1e-15);
}

TEST_CASE("affinity of entanglement monotones on block states") {
  const CheckReport a = check_monotone_affinity({bell(), bell()}, ProbDist({0.5, 0.5}), quick());
  CHECK(a.passed);
  CHECK(a.lhs == doctest::Approx(1.0).epsilon(1e-3));
  const CheckReport b = check_monotone_affinity({bell(), product()}, ProbDist({0.5, 0.5}), quick());
  CHECK(b.passed);
  CHECK(b.lhs == doctest::Approx(0.5).epsilon(1e-3));
  const DensityMatrix w(oracle::werner(0.75), {2, 2});
  const CheckReport c = check_monotone_affinity({w}, ProbDist({1.0}), quick());
  CHECK(c.passed);
  CHECK(c.rhs == doctest::Approx(oracle::werner_eof(0.75)).epsilon(1e-9));
}

TEST_CASE("weak to strong monotone expansion") {
  const CheckReport a = check_weak_to_strong_monotone(product(), product(), quick(2));
  CHECK(a.passed);
  CHECK(a.lhs < 1e-9);
  const CheckReport b = check_weak_to_strong_monotone(bell(), product(), quick(4));
  CHECK(b.passed);
  CHECK(b.details.at("single") == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(b.lhs == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(b.details.at("pair11") == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("bipartite tensor regroups factors") {
  const DensityMatrix t = bipartite_tensor(bell(), product());
  CHECK(t.dims() == std::vector<int>{4, 4});
  CHECK(von_neumann_entropy(DensityMatrix(oracle::trace_second(t.mat(), 4, 4))) == doctest::Approx(1.0));
}

TEST_CASE("Werner-Holevo two-copy counterexample") {
  const CheckReport five = wh_counterexample(5.0, quick());
  CHECK(five.passed);
  CHECK(five.lhs == doctest::Approx(-0.25 * std::log2(std::pow(3.0, -5) + 8 * std::pow(12.0, -5))).epsilon(1e-12));
  CHECK(five.details.at("violation") == 1.0);
  const CheckReport two = wh_counterexample(2.0, quick());
  CHECK(two.passed);
  CHECK(two.lhs == doctest::Approx(std::log2(6.0)).epsilon(1e-12));
  CHECK(two.details.at("violation") == 0.0);
  CHECK(wh_counterexample(4.9, quick(), false).details.at("violation") == 1.0);
  CHECK(wh_counterexample(4.7, quick(), false).details.at("violation") == 0.0);
}

TEST_CASE("HSW gap check") {
  CHECK(check_hsw_gap(depolarizing(2, 0.5), true, quick()).passed);
  const CheckReport r = check_hsw_gap(random_channel(2, 3, 2, 5), false, quick());
  CHECK(r.passed);
  CHECK(r.sidedness == Sidedness::LhsAtLeastRhs);
}

TEST_CASE("suite configuration parsing") {
  using nlohmann::json;
  CHECK(run_suite(parse_suite(json::array())).empty());
  const auto entries = parse_suite(json::parse(R"([
    {"check": "smin-dsum", "inputs": ["id2", "depol05"], "alpha": "inf", "restarts": 3, "seed": 7},
    {"check": "wh", "p": 5, "confirm": false}
  ])"));
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].alpha->is_infinite());
  CHECK(entries[0].options.restarts == 3);
  CHECK(entries[0].options.seed == 7u);
  CHECK_FALSE(entries[1].confirm);
  CHECK_THROWS_AS(parse_suite(json::parse(R"([{"check": "nope"}])")), FormatError);
  CHECK_THROWS_AS(parse_suite(json::parse(R"([{"check": "wh", "alpha": 0.5}])")), FormatError);
  CHECK_THROWS_AS(parse_suite(json::parse(R"([{"check": "wh", "restarts": 0}])")), FormatError);
  CHECK_THROWS_AS(parse_suite(json::parse(R"({"check": "wh"})")), FormatError);
  const SuiteEntry round = parse_entry(entry_to_json(entries[0]));
  CHECK(round.inputs == entries[0].inputs);
  CHECK(round.alpha->is_infinite());
}

TEST_CASE("reference resolution") {
  CHECK(resolve_channel("id2").d_in() == 2);
  CHECK(resolve_channel("random:2:3:2:5").d_out() == 3);
  CHECK_THROWS_AS(resolve_channel("random:2:x:2:5"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_channel("random:2:2"), std::invalid_argument);
  CHECK_THROWS_AS(resolve_channel("/nonexistent/channel.json"), FormatError);
  CHECK(resolve_state("bell").dims() == std::vector<int>{2, 2});
  SuiteEntry e;
  e.check = "smin-dsum";
  e.inputs = {"id2"};
  CHECK_THROWS_AS(run_check(e), std::invalid_argument);
}

TEST_CASE("negative control fails and reports are deterministic") {
  SuiteEntry e;
  e.check = "mutual-dsum";
  e.inputs = {"id2", "depol0"};
  e.options.restarts = 4;
  const CheckReport ok = run_check(e);
  CHECK(ok.passed);
  e.perturb_rhs = 0.1;
  const CheckReport broken = run_check(e);
  CHECK_FALSE(broken.passed);
  CHECK(broken.details.at("perturb_rhs") == 0.1);
  e.perturb_rhs = 0.0;
  CHECK(report_to_json(run_check(e)).dump() == report_to_json(ok).dump());
}

TEST_CASE("default suite passes and is sorted") {
  const auto entries = default_suite();
  CHECK(entries.size() >= 12);
  const auto reports = run_suite(entries);
  REQUIRE(reports.size() == entries.size());
  for (const auto& r : reports) {
    CAPTURE(r.check_name);
    CHECK(r.passed);
  }
  for (std::size_t i = 1; i < reports.size(); ++i) CHECK(reports[i - 1].check_name <= reports[i].check_name);
}

TEST_CASE("report serialization") {
  CheckReport r;
  r.check_name = "x";
  r.inputs = {"depolarizing(2,0.5)", "id2"};
  r.lhs = 1.5;
  r.rhs = 1.5;
  r.tolerance = 1e-3;
  r.passed = true;
  r.wall_time = 0.25;
  const auto j = report_to_json(r);
  CHECK(j.at("units") == "bits");
  CHECK_FALSE(j.contains("wall_time"));
  CHECK(report_to_json(r, true).at("wall_time") == 0.25);
  std::ostringstream csv;
  write_csv(csv, {r});
  CHECK(csv.str() == "name,inputs,lhs,rhs,tol,passed,seconds\nx,\"depolarizing(2,0.5);id2\",1.5,1.5,0.001,true,0.25\n");
}

}  // TEST_SUITE

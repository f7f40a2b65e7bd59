#include "sumcap/suite.hpp"

#include "sumcap/channel_io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sumcap {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument(what + ": \"" + s + "\" is not an integer");
  return v;
}

Channel random_reference(const std::string& ref) {
  const auto parts = split(ref, ':');
  if (parts.size() != 5)
    throw std::invalid_argument("random channel reference must be random:<din>:<dout>:<env>:<seed>, got " + ref);
  const int din = parse_int(parts[1], ref);
  const int dout = parse_int(parts[2], ref);
  const int env = parse_int(parts[3], ref);
  const int seed = parse_int(parts[4], ref);
  if (din < 1 || dout < 1 || env < 1 || seed < 0)
    throw std::invalid_argument(ref + ": dimensions must be >= 1 and seed >= 0");
  return random_channel(din, dout, env, static_cast<std::uint64_t>(seed));
}

DensityMatrix werner_state(double fidelity) {
  ComplexVector b = ComplexVector::Zero(4);
  b[0] = b[3] = 1.0 / std::sqrt(2.0);
  const ComplexMatrix bell = b * b.adjoint();
  const ComplexMatrix rest = ComplexMatrix::Identity(4, 4) - bell;
  return DensityMatrix(fidelity * bell + (1.0 - fidelity) / 3.0 * rest, {2, 2});
}

void require_inputs(const SuiteEntry& e, std::size_t n) {
  if (e.inputs.size() != n)
    throw std::invalid_argument(e.check + ": expected " + std::to_string(n) + " inputs, got " +
                                std::to_string(e.inputs.size()));
}

RenyiOrder parse_alpha(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "infinity") return RenyiOrder::infinity();
    throw FormatError("alpha: expected a number or \"inf\", got \"" + s + "\"");
  }
  if (!j.is_number()) throw FormatError("alpha: expected a number or \"inf\"");
  try {
    return RenyiOrder(j.get<double>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

template <class T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw FormatError(std::string("suite entry: field \"") + key + "\" has the wrong type");
  }
}

SuiteEntry entry(std::string check, std::vector<std::string> inputs, int restarts = 8) {
  SuiteEntry e;
  e.check = std::move(check);
  e.inputs = std::move(inputs);
  e.options.restarts = restarts;
  return e;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "smin-dsum",   "coherent-dsum", "mutual-dsum", "chi-dsum",
      "dsum-feasibility", "tensor-distributes", "equalize-smin", "chi-expansion",
      "superadditivity-embedding", "monotone-affinity", "weak-strong-monotone", "wh",
      "hsw-gap"};
  return names;
}

Channel resolve_channel(const std::string& ref) {
  if (ref == "id2") return identity_channel(2).relabeled(ref);
  if (ref == "id3") return identity_channel(3).relabeled(ref);
  if (ref == "depol05") return depolarizing(2, 0.5).relabeled(ref);
  if (ref == "depol0") return depolarizing(2, 0.0).relabeled(ref);
  if (ref == "const0") return constant_channel(DensityMatrix::from_pure(PureState::basis(2, 0))).relabeled(ref);
  if (ref == "const1") return constant_channel(DensityMatrix::from_pure(PureState::basis(2, 1))).relabeled(ref);
  if (ref == "deph2") return dephasing(2).relabeled(ref);
  if (ref == "wh3") return werner_holevo(3).relabeled(ref);
  if (ref == "unitary3") return unitary_channel(random_haar_unitary(3, 3)).relabeled(ref);
  if (ref.rfind("random:", 0) == 0) return random_reference(ref).relabeled(ref);
  Channel t = load_channel(ref);
  return t.label().empty() ? t.relabeled(ref) : t;
}

DensityMatrix resolve_state(const std::string& ref) {
  if (ref == "bell") return werner_state(1.0);
  if (ref == "product") return DensityMatrix::from_pure(PureState::basis(4, 0)).with_dims({2, 2});
  if (ref == "werner075") return werner_state(0.75);
  return load_state(ref);
}

SuiteEntry parse_entry(const json& j) {
  if (!j.is_object()) throw FormatError("suite entry: expected an object");
  if (!j.contains("check")) throw FormatError("suite entry: missing \"check\"");
  SuiteEntry e;
  e.check = field<std::string>(j, "check");
  if (std::find(check_names().begin(), check_names().end(), e.check) == check_names().end())
    throw FormatError("suite entry: unknown check \"" + e.check + "\"");
  if (j.contains("inputs")) e.inputs = field<std::vector<std::string>>(j, "inputs");
  if (j.contains("tolerance")) e.tolerance = field<double>(j, "tolerance");
  if (j.contains("perturb_rhs")) e.perturb_rhs = field<double>(j, "perturb_rhs");
  if (j.contains("alpha")) e.alpha = parse_alpha(j.at("alpha"));
  if (j.contains("p")) e.p = field<double>(j, "p");
  if (j.contains("quantity")) e.quantity = field<std::string>(j, "quantity");
  if (j.contains("weights")) e.weights = field<std::vector<double>>(j, "weights");
  if (j.contains("equality")) e.equality = field<bool>(j, "equality");
  if (j.contains("confirm")) e.confirm = field<bool>(j, "confirm");
  if (j.contains("seed")) e.options.seed = field<std::uint64_t>(j, "seed");
  if (j.contains("restarts")) e.options.restarts = field<int>(j, "restarts");
  if (j.contains("ensemble_size")) e.options.ensemble_size = field<int>(j, "ensemble_size");
  if (j.contains("decomposition_size")) e.options.decomposition_size = field<int>(j, "decomposition_size");
  try {
    e.options.validate();
  } catch (const std::invalid_argument& err) {
    throw FormatError(err.what());
  }
  return e;
}

std::vector<SuiteEntry> parse_suite(const json& config) {
  if (!config.is_array()) throw FormatError("suite config: expected a JSON array of checks");
  std::vector<SuiteEntry> entries;
  for (const auto& j : config) entries.push_back(parse_entry(j));
  return entries;
}

json entry_to_json(const SuiteEntry& e) {
  json j{{"check", e.check}, {"inputs", e.inputs}, {"seed", e.options.seed}, {"restarts", e.options.restarts}};
  if (e.tolerance) j["tolerance"] = *e.tolerance;
  if (e.perturb_rhs != 0.0) j["perturb_rhs"] = e.perturb_rhs;
  if (e.alpha) j["alpha"] = e.alpha->is_infinite() ? json("inf") : json(e.alpha->value());
  if (e.p) j["p"] = *e.p;
  if (e.quantity) j["quantity"] = *e.quantity;
  if (e.weights) j["weights"] = *e.weights;
  if (e.equality) j["equality"] = true;
  if (!e.confirm) j["confirm"] = false;
  if (e.options.ensemble_size) j["ensemble_size"] = *e.options.ensemble_size;
  if (e.options.decomposition_size) j["decomposition_size"] = *e.options.decomposition_size;
  return j;
}

CheckReport run_check(const SuiteEntry& e) {
  const OptimizerOptions& o = e.options;
  o.validate();
  const RenyiOrder alpha = e.alpha.value_or(RenyiOrder(1.0));
  auto tol = [&](double fallback) { return e.tolerance.value_or(fallback); };
  auto channel = [&](std::size_t i) { return resolve_channel(e.inputs.at(i)); };
  auto state = [&](std::size_t i) { return resolve_state(e.inputs.at(i)); };

  CheckReport r;
  const std::string& c = e.check;
  if (c == "smin-dsum") {
    require_inputs(e, 2);
    r = check_direct_sum_smin(channel(0), channel(1), alpha, o, tol(tolerance::kSmallDim));
  } else if (c == "coherent-dsum") {
    require_inputs(e, 2);
    r = check_direct_sum_coherent(channel(0), channel(1), o, tol(tolerance::kMediumDim));
  } else if (c == "mutual-dsum") {
    require_inputs(e, 2);
    r = check_direct_sum_mutual(channel(0), channel(1), o, tol(tolerance::kSmallDim));
  } else if (c == "chi-dsum") {
    require_inputs(e, 2);
    r = check_direct_sum_holevo(channel(0), channel(1), o, tol(tolerance::kMediumDim));
  } else if (c == "dsum-feasibility") {
    require_inputs(e, 2);
    const Quantity q = quantity_from_string(e.quantity.value_or("chi"));
    r = check_direct_sum_feasibility(channel(0), channel(1), q, alpha, o, tol(tolerance::kFeasibility));
  } else if (c == "tensor-distributes") {
    require_inputs(e, 4);
    r = check_tensor_distributes(channel(0), channel(1), channel(2), channel(3), tol(tolerance::kAlgebraic));
  } else if (c == "equalize-smin") {
    require_inputs(e, 2);
    r = equalize_smin(channel(0), channel(1), alpha, o, tol(tolerance::kSmallDim)).report;
  } else if (c == "chi-expansion") {
    require_inputs(e, 2);
    r = check_chi_expansion(channel(0), channel(1), o, tol(tolerance::kMediumDim));
  } else if (c == "superadditivity-embedding") {
    require_inputs(e, 3);
    r = check_superadditivity_embedding(channel(0), channel(1), state(2), o, tol(tolerance::kSmallDim));
  } else if (c == "monotone-affinity") {
    if (e.inputs.empty()) throw std::invalid_argument("monotone-affinity: expected at least one state");
    std::vector<DensityMatrix> states;
    for (std::size_t i = 0; i < e.inputs.size(); ++i) states.push_back(state(i));
    const ProbDist w = e.weights ? ProbDist(*e.weights) : ProbDist::uniform(states.size());
    r = check_monotone_affinity(states, w, o, tol(tolerance::kSmallDim));
  } else if (c == "weak-strong-monotone") {
    require_inputs(e, 2);
    r = check_weak_to_strong_monotone(state(0), state(1), o, tol(tolerance::kSmallDim));
  } else if (c == "wh") {
    require_inputs(e, 0);
    if (!e.p) throw std::invalid_argument("wh: missing p");
    r = wh_counterexample(*e.p, o, e.confirm, tol(1e-9));
  } else if (c == "hsw-gap") {
    require_inputs(e, 1);
    r = check_hsw_gap(channel(0), e.equality, o, tol(tolerance::kSmallDim));
  } else {
    throw std::invalid_argument("unknown check \"" + c + "\"");
  }
  if (!e.inputs.empty()) r.inputs = e.inputs;
  if (e.perturb_rhs != 0.0) {
    r.rhs += e.perturb_rhs;
    r.passed = within(r.lhs, r.rhs, r.tolerance, r.sidedness);
    r.details["perturb_rhs"] = e.perturb_rhs;
    r.note += (r.note.empty() ? "" : " ") + std::string("negative-control");
  }
  return r;
}

std::vector<CheckReport> run_suite(const std::vector<SuiteEntry>& entries) {
  std::vector<CheckReport> reports;
  reports.reserve(entries.size());
  for (const auto& e : entries) reports.push_back(run_check(e));
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    if (a.check_name != b.check_name) return a.check_name < b.check_name;
    return a.inputs < b.inputs;
  });
  return reports;
}

std::vector<SuiteEntry> default_suite() {
  std::vector<SuiteEntry> s;
  s.push_back(entry("smin-dsum", {"id2", "depol05"}));
  s.push_back(entry("smin-dsum", {"depol05", "depol05"}));
  s.back().alpha = RenyiOrder(2.0);
  s.push_back(entry("coherent-dsum", {"id2", "depol0"}));
  s.push_back(entry("coherent-dsum", {"unitary3", "id2"}));
  s.push_back(entry("mutual-dsum", {"id2", "id2"}));
  s.push_back(entry("mutual-dsum", {"id2", "depol0"}));
  s.push_back(entry("chi-dsum", {"id2", "depol05"}));
  s.push_back(entry("chi-dsum", {"const0", "const1"}));
  s.push_back(entry("dsum-feasibility", {"random:2:3:2:11", "random:3:2:2:12"}));
  s.push_back(entry("tensor-distributes", {"random:2:2:2:1", "random:2:3:2:2", "random:3:2:2:3", "depol05"}));
  s.push_back(entry("equalize-smin", {"id2", "depol05"}));
  s.push_back(entry("chi-expansion", {"id2", "const0"}, 4));
  s.push_back(entry("superadditivity-embedding", {"deph2", "deph2", "bell"}));
  s.push_back(entry("monotone-affinity", {"bell", "bell"}));
  s.push_back(entry("monotone-affinity", {"bell", "product"}));
  s.push_back(entry("weak-strong-monotone", {"bell", "product"}, 4));
  s.push_back(entry("wh", {}));
  s.back().p = 5.0;
  s.push_back(entry("hsw-gap", {"depol05"}));
  s.back().equality = true;
  return s;
}

}  // namespace sumcap

#include "sumcap/cli.hpp"

#include "sumcap/channel_io.hpp"
#include "sumcap/suite.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace sumcap {

using nlohmann::json;

namespace {

/// Input rejected before any computation.
struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RenyiOrder parse_order(const std::string& s) {
  if (s == "inf" || s == "infinity") return RenyiOrder::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw InvalidInput("alpha: \"" + s + "\" is not a number or \"inf\"");
  try {
    return RenyiOrder(v);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

std::vector<double> parse_list(const std::string& s, const char* what) {
  std::vector<double> values;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    try {
      values.push_back(std::stod(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InvalidInput(std::string(what) + ": \"" + item + "\" is not a number");
  }
  if (values.empty()) throw InvalidInput(std::string(what) + ": empty list");
  return values;
}

json vector_to_json(const ComplexVector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back({v[i].real(), v[i].imag()});
  return arr;
}

int rank_of(const DensityMatrix& rho) {
  const RealVector ev = rho.eigenvalues();
  return static_cast<int>((ev.array() > 1e-10).count());
}

json witness_summary(const Witness& w) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PureState>) return {{"type", "pure"}, {"dim", x.dim()}};
        else if constexpr (std::is_same_v<T, DensityMatrix>)
          return {{"type", "density"}, {"dim", x.dim()}, {"rank", rank_of(x)}};
        else
          return {{"type", "ensemble"}, {"size", x.size()}, {"dim", x.states().front().dim()}};
      },
      w);
}

json witness_to_json(const Witness& w) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PureState>) return {{"vector", vector_to_json(x.vec())}};
        else if constexpr (std::is_same_v<T, DensityMatrix>) return {{"matrix", matrix_to_json(x.mat())}};
        else {
          json members = json::array();
          for (std::size_t k = 0; k < x.size(); ++k)
            members.push_back({{"p", x.probs()[k]}, {"matrix", matrix_to_json(x.states()[k].mat())}});
          return {{"members", members}};
        }
      },
      w);
}

json result_to_json(const QuantityResult& r, bool emit_witness) {
  json j{{"value", r.value},
         {"units", "bits"},
         {"bound_kind", to_string(r.bound_kind)},
         {"converged", r.converged},
         {"restarts_used", r.restarts_used},
         {"best_restart_index", r.best_restart_index},
         {"witness_value", r.witness_value},
         {"witness_summary", witness_summary(r.witness)}};
  if (!r.converged) j["warning"] = "best restart did not meet the stopping criterion";
  if (emit_witness) j["witness"] = witness_to_json(r.witness);
  return j;
}

Channel load_channel_ref(const std::string& ref) {
  try {
    return resolve_channel(ref);
  } catch (const FormatError& e) {
    throw InvalidInput(e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
}

DensityMatrix load_state_ref(const std::string& ref) {
  try {
    return resolve_state(ref);
  } catch (const FormatError& e) {
    throw InvalidInput(e.what());
  }
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidInput("cannot write " + path);
  file << text;
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- make-channel -------------------------------------------------------------

struct MakeArgs {
  std::string name;
  std::string out;
  int d = 2;
  double lambda = 0.0;
  int din = 0;
  int dout = 0;
  int env = 2;
  std::uint64_t seed = 0;
  int da = 2;
  int db = 2;
  std::string side = "B";
  int state_index = 0;
  std::string state;
  std::string probs;
};

Channel make_named_channel(const MakeArgs& a) {
  const std::string& n = a.name;
  if (n == "identity") return identity_channel(a.d);
  if (n == "depolarizing") return depolarizing(a.d, a.lambda);
  if (n == "dephasing") return dephasing(a.d);
  if (n == "werner_holevo") return werner_holevo(a.d);
  if (n == "partial_trace") {
    if (a.side != "A" && a.side != "B") throw InvalidInput("partial_trace: --side must be A or B");
    return partial_trace_channel(a.da, a.db, a.side == "A" ? Traced::A : Traced::B);
  }
  if (n == "constant") {
    DensityMatrix sigma = a.state.empty() ? DensityMatrix::from_pure(PureState::basis(a.d, a.state_index))
                                          : load_state_ref(a.state);
    return constant_channel(sigma, a.din);
  }
  if (n == "mixed_unitary") {
    const std::vector<double> p = parse_list(a.probs.empty() ? "1" : a.probs, "--probs");
    std::vector<ComplexMatrix> us;
    for (std::size_t k = 0; k < p.size(); ++k) us.push_back(random_haar_unitary(a.d, a.seed + k));
    return mixed_unitary(ProbDist(p), us);
  }
  if (n == "random") {
    const int din = a.din > 0 ? a.din : a.d;
    const int dout = a.dout > 0 ? a.dout : a.d;
    return random_channel(din, dout, a.env, a.seed);
  }
  throw InvalidInput("unknown channel \"" + n +
                     "\" (expected identity, depolarizing, dephasing, constant, partial_trace, "
                     "werner_holevo, mixed_unitary, random)");
}

int cmd_make_channel(const MakeArgs& a, std::ostream& out) {
  Channel t = [&] {
    try {
      return make_named_channel(a);
    } catch (const std::invalid_argument& e) {
      throw InvalidInput(e.what());
    }
  }();
  write_text(channel_to_json(t).dump(2) + "\n", a.out, out);
  return kExitOk;
}

// --- compute --------------------------------------------------------------------

struct ComputeArgs {
  std::string quantity;
  std::vector<std::string> channels;
  std::string alpha = "1";
  bool tensor = false;
  bool direct_sum = false;
  std::string state;
  bool emit_witness = false;
  bool timing = false;
  std::string out;
  OptimizerOptions options;
  std::optional<int> ensemble_size;
  std::optional<int> decomposition_size;
};

const std::vector<std::string> kQuantities{"smin", "coherent", "mutual", "chi", "gap", "hconv", "chi-constrained", "eof"};

int cmd_compute(ComputeArgs a, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  if (std::find(kQuantities.begin(), kQuantities.end(), a.quantity) == kQuantities.end())
    throw InvalidInput("unknown quantity \"" + a.quantity + "\"");
  a.options.ensemble_size = a.ensemble_size;
  a.options.decomposition_size = a.decomposition_size;
  try {
    a.options.validate();
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
  if (a.tensor && a.direct_sum) throw InvalidInput("--tensor and --direct-sum are exclusive");
  const bool combined = a.tensor || a.direct_sum;
  const bool needs_channel = a.quantity != "eof";
  const bool needs_state = a.quantity == "eof" || a.quantity == "hconv" || a.quantity == "chi-constrained";

  json j{{"quantity", a.quantity}, {"units", "bits"}, {"options", options_to_json(a.options)}};
  std::optional<Channel> channel;
  if (needs_channel) {
    const std::size_t expected = combined ? 2 : 1;
    if (a.channels.size() != expected)
      throw InvalidInput("compute " + a.quantity + ": expected " + std::to_string(expected) + " channel(s)");
    channel = load_channel_ref(a.channels[0]);
    if (combined) {
      const Channel second = load_channel_ref(a.channels[1]);
      channel = a.tensor ? tensor(*channel, second) : direct_sum(*channel, second);
    }
    j["channel"] = channel->label();
    j["d_in"] = channel->d_in();
    j["d_out"] = channel->d_out();
  } else if (!a.channels.empty()) {
    throw InvalidInput("compute eof takes a --state, not channel files");
  }
  std::optional<DensityMatrix> state;
  if (needs_state) {
    if (a.state.empty()) throw InvalidInput("compute " + a.quantity + ": --state is required");
    state = load_state_ref(a.state);
    j["state"] = a.state;
  }

  auto merge = [&](const QuantityResult& r) {
    const json part = result_to_json(r, a.emit_witness);
    for (const auto& [k, v] : part.items()) j[k] = v;
  };
  try {
    if (a.quantity == "smin") {
      const RenyiOrder alpha = parse_order(a.alpha);
      j["alpha"] = alpha.to_string();
      merge(min_output_renyi(*channel, alpha, a.options));
    } else if (a.quantity == "coherent") {
      merge(coherent_information(*channel, a.options));
    } else if (a.quantity == "mutual") {
      merge(mutual_information(*channel, a.options));
    } else if (a.quantity == "chi") {
      merge(holevo_capacity(*channel, a.options));
    } else if (a.quantity == "hconv") {
      merge(convex_closure_output_entropy(*channel, *state, a.options));
    } else if (a.quantity == "chi-constrained") {
      merge(constrained_holevo(*channel, *state, a.options));
    } else if (a.quantity == "eof") {
      merge(eof(*state, a.options));
    } else if (a.quantity == "gap") {
      const QuantityResult smin = min_output_renyi(*channel, RenyiOrder(1.0), a.options);
      const QuantityResult chi = holevo_capacity(*channel, a.options);
      j["value"] = std::log2(static_cast<double>(channel->d_out())) - smin.value - chi.value;
      j["bound_kind"] = "estimate";
      j["converged"] = smin.converged && chi.converged;
      j["smin"] = result_to_json(smin, a.emit_witness);
      j["chi"] = result_to_json(chi, a.emit_witness);
    }
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
  if (a.timing) j["wall_time"] = elapsed(start);
  write_text(j.dump(2) + "\n", a.out, out);
  return kExitOk;
}

// --- verify / suite ------------------------------------------------------------

struct VerifyArgs {
  std::string check;
  std::vector<std::string> inputs;
  std::optional<double> p;
  std::optional<std::string> alpha;
  std::optional<double> tolerance;
  std::optional<std::string> quantity;
  std::optional<std::string> weights;
  bool equality = false;
  bool no_confirm = false;
  double perturb_rhs = 0.0;
  bool timing = false;
  std::string out;
  OptimizerOptions options;
  std::optional<int> ensemble_size;
  std::optional<int> decomposition_size;
};

CheckReport run_check_checked(const SuiteEntry& e) {
  try {
    return run_check(e);
  } catch (const FormatError& err) {
    throw InvalidInput(err.what());
  } catch (const std::invalid_argument& err) {
    throw InvalidInput(err.what());
  } catch (const std::out_of_range& err) {
    throw InvalidInput(err.what());
  }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (std::find(check_names().begin(), check_names().end(), a.check) == check_names().end())
    throw InvalidInput("unknown check \"" + a.check + "\"");
  SuiteEntry e;
  e.check = a.check;
  e.inputs = a.inputs;
  e.tolerance = a.tolerance;
  e.perturb_rhs = a.perturb_rhs;
  if (a.alpha) e.alpha = parse_order(*a.alpha);
  e.p = a.p;
  e.quantity = a.quantity;
  if (a.weights) e.weights = parse_list(*a.weights, "--weights");
  e.equality = a.equality;
  e.confirm = !a.no_confirm;
  e.options = a.options;
  e.options.ensemble_size = a.ensemble_size;
  e.options.decomposition_size = a.decomposition_size;
  const CheckReport r = run_check_checked(e);
  write_text(report_to_json(r, a.timing).dump(2) + "\n", a.out, out);
  return r.passed ? kExitOk : kExitCheckFailed;
}

struct SuiteArgs {
  std::string config;
  std::string out;
  std::string format = "json";
  bool timing = false;
  bool print_config = false;
};

int cmd_suite(const SuiteArgs& a, std::ostream& out) {
  std::vector<SuiteEntry> entries;
  if (a.config.empty()) {
    entries = default_suite();
  } else {
    std::ifstream in(a.config);
    if (!in) throw InvalidInput("cannot open " + a.config);
    try {
      entries = parse_suite(json::parse(in));
    } catch (const json::parse_error& e) {
      throw InvalidInput(a.config + ": not valid JSON: " + e.what());
    } catch (const FormatError& e) {
      throw InvalidInput(a.config + ": " + e.what());
    }
  }
  if (a.print_config) {
    json cfg = json::array();
    for (const auto& e : entries) cfg.push_back(entry_to_json(e));
    out << cfg.dump(2) << "\n";
    return kExitOk;
  }
  std::vector<CheckReport> reports;
  {
    // Inputs are resolved lazily; validate every entry before running any.
    for (const auto& e : entries)
      for (const auto& ref : e.inputs) {
        const bool is_state = e.check == "monotone-affinity" || e.check == "weak-strong-monotone" ||
                              (e.check == "superadditivity-embedding" && &ref == &e.inputs.back());
        if (is_state) load_state_ref(ref);
        else load_channel_ref(ref);
      }
    for (const auto& e : entries) reports.push_back(run_check_checked(e));
    std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& x, const CheckReport& y) {
      if (x.check_name != y.check_name) return x.check_name < y.check_name;
      return x.inputs < y.inputs;
    });
  }
  const std::string json_text = reports_to_json(reports, a.timing).dump(2) + "\n";
  std::ostringstream csv;
  write_csv(csv, reports);
  if (!a.out.empty()) {
    std::filesystem::path json_path(a.out);
    std::filesystem::path csv_path = json_path;
    csv_path.replace_extension(".csv");
    if (csv_path == json_path) json_path.replace_extension(".json");
    write_text(json_text, json_path.string(), out);
    write_text(csv.str(), csv_path.string(), out);
  }
  out << (a.format == "csv" ? csv.str() : json_text);
  const bool all = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
  return all ? kExitOk : kExitCheckFailed;
}

void add_optimizer_flags(CLI::App* cmd, OptimizerOptions& o, std::optional<int>& ensemble,
                         std::optional<int>& decomposition) {
  cmd->add_option("--seed", o.seed, "base seed; restart r uses seed + r");
  cmd->add_option("--restarts", o.restarts, "number of random restarts")->capture_default_str();
  cmd->add_option("--max-iterations", o.max_iterations)->capture_default_str();
  cmd->add_option("--objective-tolerance", o.objective_tolerance)->capture_default_str();
  cmd->add_option("--ensemble-size", ensemble, "pure states per HSW ensemble (default d_in^2)");
  cmd->add_option("--decomposition-size", decomposition, "members per convex-roof decomposition (default rank^2)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information quantities of quantum channels and direct-sum identity checks", "sumcap"};
  app.require_subcommand(1);

  MakeArgs make;
  auto* make_cmd = app.add_subcommand("make-channel", "write a named channel as JSON");
  make_cmd->add_option("name", make.name, "identity, depolarizing, dephasing, constant, partial_trace, "
                                          "werner_holevo, mixed_unitary, random")->required();
  make_cmd->add_option("--out,-o", make.out, "output file (default stdout)");
  make_cmd->add_option("--d", make.d, "dimension")->capture_default_str();
  make_cmd->add_option("--lambda", make.lambda, "depolarizing parameter");
  make_cmd->add_option("--din", make.din, "input dimension (random, constant)");
  make_cmd->add_option("--dout", make.dout, "output dimension (random)");
  make_cmd->add_option("--env", make.env, "environment dimension (random)")->capture_default_str();
  make_cmd->add_option("--seed", make.seed, "seed (random, mixed_unitary)");
  make_cmd->add_option("--da", make.da, "first factor (partial_trace)")->capture_default_str();
  make_cmd->add_option("--db", make.db, "second factor (partial_trace)")->capture_default_str();
  make_cmd->add_option("--side", make.side, "traced factor A or B (partial_trace)")->capture_default_str();
  make_cmd->add_option("--state-index", make.state_index, "basis output state (constant)");
  make_cmd->add_option("--state", make.state, "output state file or builtin (constant)");
  make_cmd->add_option("--probs", make.probs, "comma-separated weights of Haar unitaries (mixed_unitary)");

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "compute one quantity");
  compute_cmd->add_option("quantity", compute.quantity,
                          "smin, coherent, mutual, chi, gap, hconv, chi-constrained, eof")->required();
  compute_cmd->add_option("channels", compute.channels, "channel files or builtin names");
  compute_cmd->add_option("--alpha", compute.alpha, "Renyi order >= 1 or inf (smin)")->capture_default_str();
  compute_cmd->add_flag("--tensor", compute.tensor, "use the tensor product of two channels");
  compute_cmd->add_flag("--direct-sum", compute.direct_sum, "use the direct sum of two channels");
  compute_cmd->add_option("--state", compute.state, "state file or builtin (eof, hconv, chi-constrained)");
  compute_cmd->add_flag("--emit-witness", compute.emit_witness, "include the witness in the output");
  compute_cmd->add_flag("--timing", compute.timing, "include wall_time (breaks byte reproducibility)");
  compute_cmd->add_option("--out,-o", compute.out, "output file (default stdout)");
  compute.options.restarts = 32;
  add_optimizer_flags(compute_cmd, compute.options, compute.ensemble_size, compute.decomposition_size);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run one identity check");
  verify_cmd->add_option("check", verify.check, "check name")->required();
  verify_cmd->add_option("inputs", verify.inputs, "channel/state files or builtin names");
  verify_cmd->add_option("--p", verify.p, "Schatten/Renyi order (wh)");
  verify_cmd->add_option("--alpha", verify.alpha, "Renyi order >= 1 or inf");
  verify_cmd->add_option("--tolerance", verify.tolerance, "override the default tolerance");
  verify_cmd->add_option("--quantity", verify.quantity, "smin, coherent, mutual or chi (dsum-feasibility)");
  verify_cmd->add_option("--weights", verify.weights, "comma-separated block weights (monotone-affinity)");
  verify_cmd->add_flag("--equality", verify.equality, "expect equality (hsw-gap)");
  verify_cmd->add_flag("--no-confirm", verify.no_confirm, "skip the two-copy optimizer run (wh)");
  verify_cmd->add_option("--perturb-rhs", verify.perturb_rhs, "negative control: shift the rhs");
  verify_cmd->add_flag("--timing", verify.timing, "include wall_time");
  verify_cmd->add_option("--out,-o", verify.out, "output file (default stdout)");
  verify.options.restarts = 32;
  add_optimizer_flags(verify_cmd, verify.options, verify.ensemble_size, verify.decomposition_size);

  SuiteArgs suite;
  auto* suite_cmd = app.add_subcommand("suite", "run a configured list of checks");
  suite_cmd->add_option("config", suite.config, "JSON list of checks (default: builtin reference suite)");
  suite_cmd->add_option("--out,-o", suite.out, "write JSON here and CSV next to it");
  suite_cmd->add_option("--format", suite.format, "stdout format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  suite_cmd->add_flag("--timing", suite.timing, "include wall_time in JSON");
  suite_cmd->add_flag("--print-config", suite.print_config, "print the resolved configuration and exit");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (make_cmd->parsed()) return cmd_make_channel(make, out);
    if (compute_cmd->parsed()) return cmd_compute(compute, out);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (suite_cmd->parsed()) return cmd_suite(suite, out);
  } catch (const InvalidInput& e) {
    err << "sumcap: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const FormatError& e) {
    err << "sumcap: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "sumcap: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace sumcap

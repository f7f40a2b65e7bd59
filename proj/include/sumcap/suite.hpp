// Check registry, suite configuration and report serialization.
#pragma once

#include "sumcap/harness.hpp"

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sumcap {

/// One configured check. Inputs are builtin reference names or JSON files.
struct SuiteEntry {
  std::string check;
  std::vector<std::string> inputs;
  std::optional<double> tolerance;
  /// Added to the rhs after the check ran; a nonzero value is a negative control.
  double perturb_rhs = 0.0;
  std::optional<RenyiOrder> alpha;
  std::optional<double> p;
  std::optional<std::string> quantity;
  std::optional<std::vector<double>> weights;
  bool equality = false;  // hsw-gap: expect log2 d - S_min = chi
  bool confirm = true;    // wh: run the optimizer on the two-copy channel
  OptimizerOptions options;
};

/// Names accepted by SuiteEntry::check.
const std::vector<std::string>& check_names();

/// Builtin channels: id2, id3, depol05, depol0, const0, const1, deph2, wh3,
/// unitary3, random:<din>:<dout>:<env>:<seed>. Anything else is read as a
/// channel JSON file.
Channel resolve_channel(const std::string& ref);
/// Builtin states: bell, product, werner075. Anything else is a state file.
DensityMatrix resolve_state(const std::string& ref);

/// Parses a JSON list of entries; throws FormatError on malformed input.
std::vector<SuiteEntry> parse_suite(const nlohmann::json& config);
SuiteEntry parse_entry(const nlohmann::json& j);
nlohmann::json entry_to_json(const SuiteEntry& e);

/// Runs one entry. Throws std::invalid_argument / FormatError on bad input.
CheckReport run_check(const SuiteEntry& entry);
/// Runs all entries; reports sorted by check name, then inputs.
std::vector<CheckReport> run_suite(const std::vector<SuiteEntry>& entries);

/// Reference configuration, all checks expected to pass.
std::vector<SuiteEntry> default_suite();

/// `include_timing` adds the wall_time field; leave it off for
/// byte-reproducible output.
nlohmann::json report_to_json(const CheckReport& r, bool include_timing = false);
nlohmann::json reports_to_json(const std::vector<CheckReport>& rs, bool include_timing = false);
nlohmann::json options_to_json(const OptimizerOptions& o);
/// Header plus one row per report: name,inputs,lhs,rhs,tol,passed,seconds.
void write_csv(std::ostream& out, const std::vector<CheckReport>& rs);

}  // namespace sumcap

#include "sumcap/suite.hpp"

#include <iomanip>
#include <limits>

namespace sumcap {

using nlohmann::json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

}  // namespace

json options_to_json(const OptimizerOptions& o) {
  json j{{"restarts", o.restarts},
         {"max_iterations", o.max_iterations},
         {"objective_tolerance", o.objective_tolerance},
         {"seed", o.seed}};
  if (o.ensemble_size) j["ensemble_size"] = *o.ensemble_size;
  if (o.decomposition_size) j["decomposition_size"] = *o.decomposition_size;
  return j;
}

json report_to_json(const CheckReport& r, bool include_timing) {
  json details = json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  json j{{"check", r.check_name},
         {"inputs", r.inputs},
         {"lhs", r.lhs},
         {"rhs", r.rhs},
         {"tolerance", r.tolerance},
         {"sidedness", to_string(r.sidedness)},
         {"passed", r.passed},
         {"seed", r.options.seed},
         {"options", options_to_json(r.options)},
         {"details", details},
         {"units", "bits"}};
  if (!r.note.empty()) j["note"] = r.note;
  if (include_timing) j["wall_time"] = r.wall_time;
  return j;
}

json reports_to_json(const std::vector<CheckReport>& rs, bool include_timing) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(report_to_json(r, include_timing));
  return arr;
}

void write_csv(std::ostream& out, const std::vector<CheckReport>& rs) {
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  out << "name,inputs,lhs,rhs,tol,passed,seconds\n";
  for (const auto& r : rs) {
    out << csv_field(r.check_name) << ',' << csv_field(join(r.inputs, ";")) << ',' << r.lhs << ','
        << r.rhs << ',' << r.tolerance << ',' << (r.passed ? "true" : "false") << ',' << r.wall_time
        << '\n';
  }
  out.precision(old_precision);
}

}  // namespace sumcap

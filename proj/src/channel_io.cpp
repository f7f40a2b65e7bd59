#include "sumcap/channel_io.hpp"

#include <fstream>
#include <sstream>

namespace sumcap {

using nlohmann::json;

namespace {

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": not valid JSON: " + e.what());
  }
}

void write_json(const json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

int required_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw FormatError(std::string("missing or non-integer field \"") + key + "\"");
  return j.at(key).get<int>();
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty())
    throw FormatError(what + ": expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw FormatError(what + ": ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const auto& z = row[c];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw FormatError(what + ": entries must be [re, im] pairs");
      m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

json channel_to_json(const Channel& t) {
  json kraus = json::array();
  for (const auto& k : t.kraus()) kraus.push_back(matrix_to_json(k));
  return json{{"label", t.label()}, {"d_in", t.d_in()}, {"d_out", t.d_out()}, {"kraus", kraus}};
}

Channel channel_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("channel: expected a JSON object");
  const int d_in = required_int(j, "d_in");
  const int d_out = required_int(j, "d_out");
  if (d_in < 1 || d_out < 1) throw FormatError("channel: dimensions must be >= 1");
  if (!j.contains("kraus") || !j.at("kraus").is_array() || j.at("kraus").empty())
    throw FormatError("channel: \"kraus\" must be a non-empty array (Kraus count >= 1)");
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < j.at("kraus").size(); ++i) {
    ComplexMatrix k = matrix_from_json(j.at("kraus")[i], "kraus[" + std::to_string(i) + "]");
    if (k.rows() != d_out || k.cols() != d_in) {
      std::ostringstream msg;
      msg << "channel: kraus[" << i << "] has shape " << k.rows() << "x" << k.cols()
          << ", expected d_out x d_in = " << d_out << "x" << d_in;
      throw FormatError(msg.str());
    }
    kraus.push_back(std::move(k));
  }
  const double err = trace_preservation_error(kraus);
  if (!(err <= kCptpTolerance)) {
    std::ostringstream msg;
    msg << "channel: trace preservation violated, ||sum K^dag K - I||_max = " << err
        << " exceeds " << kCptpTolerance;
    throw FormatError(msg.str());
  }
  std::string label;
  if (j.contains("label") && j.at("label").is_string()) label = j.at("label").get<std::string>();
  return Channel(std::move(kraus), std::move(label));
}

json state_to_json(const DensityMatrix& rho) {
  return json{{"dims", rho.dims()}, {"matrix", matrix_to_json(rho.mat())}};
}

DensityMatrix state_from_json(const json& j) {
  if (!j.is_object() || !j.contains("matrix")) throw FormatError("state: expected an object with \"matrix\"");
  ComplexMatrix m = matrix_from_json(j.at("matrix"), "matrix");
  std::vector<int> dims;
  if (j.contains("dims")) {
    if (!j.at("dims").is_array()) throw FormatError("state: \"dims\" must be an array");
    for (const auto& d : j.at("dims")) {
      if (!d.is_number_integer()) throw FormatError("state: \"dims\" entries must be integers");
      dims.push_back(d.get<int>());
    }
  }
  try {
    return DensityMatrix(std::move(m), std::move(dims));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("state: ") + e.what());
  }
}

Channel load_channel(const std::filesystem::path& path) {
  const json j = read_json(path);
  try {
    return channel_from_json(j);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void save_channel(const Channel& t, const std::filesystem::path& path) {
  write_json(channel_to_json(t), path);
}

DensityMatrix load_state(const std::filesystem::path& path) {
  const json j = read_json(path);
  try {
    return state_from_json(j);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void save_state(const DensityMatrix& rho, const std::filesystem::path& path) {
  write_json(state_to_json(rho), path);
}

}  // namespace sumcap

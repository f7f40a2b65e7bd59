// JSON serialization of channels and density matrices.
//
// Channel file:
//   {"label": str, "d_in": int, "d_out": int,
//    "kraus": [ [ [ [re, im], ... cols ], ... rows ], ... ]}
// State file:
//   {"dims": [int, ...], "matrix": [ [ [re, im], ... cols ], ... rows ]}
#pragma once

#include "sumcap/channels.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>

namespace sumcap {

/// Malformed or invalid input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& what);

nlohmann::json channel_to_json(const Channel& t);
/// Throws FormatError naming the violated invariant.
Channel channel_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& j);

Channel load_channel(const std::filesystem::path& path);
void save_channel(const Channel& t, const std::filesystem::path& path);
DensityMatrix load_state(const std::filesystem::path& path);
void save_state(const DensityMatrix& rho, const std::filesystem::path& path);

}  // namespace sumcap

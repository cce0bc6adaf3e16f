#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace arbocoh::cli {

struct Tolerances {
  double orthogonality = 1e-9;
  double psd = 1e-9;
  double intertwiner = 1e-8;
  double unitarity = 1e-6;
};

struct Config {
  int default_depth = 12;
  std::size_t group_order_bound = 1'000'000;
  Tolerances tolerances;
  std::string output_format = "json";  // json | csv
  std::uint64_t seed = 0;
};

/// Reads the keys present in `j` over the defaults. Throws InvalidArgument on
/// unknown keys, wrong types or non-positive values.
Config config_from_json(const nlohmann::json& j);
Config load_config(const std::string& path);
void validate(const Config& c);

nlohmann::ordered_json config_to_json(const Config& c);

}  // namespace arbocoh::cli

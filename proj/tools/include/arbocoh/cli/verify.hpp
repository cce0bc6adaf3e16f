#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arbocoh/cli/config.hpp"

namespace arbocoh::cli {

/// geometry, flip, groups, reps, spherical.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". The report carries one record per check
/// (instances, failures, worst residual) and an overall "passed" flag. Throws
/// UnknownSuite.
nlohmann::ordered_json run_suite(const std::string& name, const Config& cfg);

}  // namespace arbocoh::cli

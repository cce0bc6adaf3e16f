#pragma once

#include <complex>
#include <string>

#include <nlohmann/json.hpp>

namespace arbocoh::cli {

/// x rounded to 12 significant digits, so that JSON output is stable across runs.
double round12(double x);
/// [re, im], both rounded.
nlohmann::ordered_json complex_json(std::complex<double> z);

/// JSON: the whole report, indented. CSV: report["table"], one row per element,
/// header from the first row's keys.
std::string render(const nlohmann::ordered_json& report, const std::string& format);

}  // namespace arbocoh::cli

#include "arbocoh/cli/output.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace arbocoh::cli {

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;  // drop negative zero
}

nlohmann::ordered_json complex_json(std::complex<double> z) {
  return nlohmann::ordered_json::array({round12(z.real()), round12(z.imag())});
}

namespace {

std::string csv_cell(const nlohmann::ordered_json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
    s = buf;
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string render(const nlohmann::ordered_json& report, const std::string& format) {
  if (format != "csv") return report.dump(2) + "\n";
  std::ostringstream out;
  const auto& table = report.contains("table") ? report.at("table") : nlohmann::ordered_json::array();
  if (table.empty()) return "";
  bool first = true;
  for (const auto& [key, value] : table.front().items()) {
    out << (first ? "" : ",") << csv_cell(key);
    first = false;
  }
  out << "\n";
  for (const auto& row : table) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      out << (first ? "" : ",") << csv_cell(value);
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace arbocoh::cli

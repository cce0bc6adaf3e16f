#include "arbocoh/cli/config.hpp"

#include <fstream>

#include "arbocoh/error.hpp"

namespace arbocoh::cli {

namespace {

template <class T>
T get(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("config key ") + key + ": " + e.what());
  }
}

void reject_unknown(const nlohmann::json& j, std::initializer_list<const char*> keys, const std::string& where) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw Error(ErrorKind::InvalidArgument, "unknown config key " + where + k);
  }
}

}  // namespace

Config config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "config must be a JSON object");
  reject_unknown(j, {"default_depth", "group_order_bound", "tolerances", "output_format", "seed"}, "");
  Config c;
  c.default_depth = get(j, "default_depth", c.default_depth);
  c.group_order_bound = get(j, "group_order_bound", c.group_order_bound);
  c.output_format = get(j, "output_format", c.output_format);
  c.seed = get(j, "seed", c.seed);
  if (j.contains("tolerances")) {
    const auto& t = j.at("tolerances");
    if (!t.is_object()) throw Error(ErrorKind::InvalidArgument, "tolerances must be an object");
    reject_unknown(t, {"orthogonality", "psd", "intertwiner", "unitarity"}, "tolerances.");
    c.tolerances.orthogonality = get(t, "orthogonality", c.tolerances.orthogonality);
    c.tolerances.psd = get(t, "psd", c.tolerances.psd);
    c.tolerances.intertwiner = get(t, "intertwiner", c.tolerances.intertwiner);
    c.tolerances.unitarity = get(t, "unitarity", c.tolerances.unitarity);
  }
  validate(c);
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open config " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, "config " + path + ": " + e.what());
  }
  return config_from_json(j);
}

void validate(const Config& c) {
  if (c.default_depth <= 0) throw Error(ErrorKind::InvalidArgument, "default_depth must be positive");
  if (c.group_order_bound == 0) throw Error(ErrorKind::InvalidArgument, "group_order_bound must be positive");
  const Tolerances& t = c.tolerances;
  if (!(t.orthogonality > 0 && t.psd > 0 && t.intertwiner > 0 && t.unitarity > 0)) {
    throw Error(ErrorKind::InvalidArgument, "tolerances must be positive");
  }
  if (c.output_format != "json" && c.output_format != "csv") {
    throw Error(ErrorKind::InvalidArgument, "output_format must be json or csv");
  }
}

nlohmann::ordered_json config_to_json(const Config& c) {
  nlohmann::ordered_json j;
  j["default_depth"] = c.default_depth;
  j["group_order_bound"] = c.group_order_bound;
  j["tolerances"] = {{"orthogonality", c.tolerances.orthogonality},
                     {"psd", c.tolerances.psd},
                     {"intertwiner", c.tolerances.intertwiner},
                     {"unitarity", c.tolerances.unitarity}};
  j["output_format"] = c.output_format;
  j["seed"] = c.seed;
  return j;
}

}  // namespace arbocoh::cli

#include "arbocoh/shape_io.hpp"

#include "arbocoh/error.hpp"

namespace arbocoh {

Shape shape_from_json(const nlohmann::json& j) {
  try {
    const int q = j.at("q").get<int>();
    std::vector<std::string> ids;
    for (const auto& v : j.at("vertices")) ids.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    auto index = [&ids](const nlohmann::json& v) {
      const std::string key = v.is_string() ? v.get<std::string>() : v.dump();
      for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] == key) return static_cast<int>(i);
      }
      throw Error(ErrorKind::InvalidArgument, "edge references unknown vertex " + key);
    };
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::InvalidArgument, "edge must be a pair");
      edges.emplace_back(index(e[0]), index(e[1]));
    }
    return Shape(q, std::move(ids), edges);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed shape JSON: ") + ex.what());
  }
}

nlohmann::ordered_json shape_to_json(const Shape& s) {
  nlohmann::ordered_json j;
  j["q"] = s.q();
  j["vertices"] = s.ids();
  auto edges = nlohmann::ordered_json::array();
  for (auto [a, b] : s.edges()) edges.push_back({s.id(a), s.id(b)});
  j["edges"] = std::move(edges);
  return j;
}

nlohmann::ordered_json vertex_to_json(const Vertex& v) {
  auto out = nlohmann::ordered_json::array();
  for (Label l : v.word()) out.push_back(static_cast<int>(l));
  return out;
}

Vertex vertex_from_json(const nlohmann::json& j) {
  std::vector<Label> word;
  for (const auto& l : j) {
    const int x = l.get<int>();
    if (x < 0 || x > 255) throw Error(ErrorKind::InvalidArgument, "label out of range");
    word.push_back(static_cast<Label>(x));
  }
  return Vertex(std::move(word));
}

nlohmann::ordered_json embedding_to_json(const EmbeddedSubtree& e) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : e.placement) out.push_back(vertex_to_json(v));
  return out;
}

}  // namespace arbocoh

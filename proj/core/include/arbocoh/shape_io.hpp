#pragma once

#include <nlohmann/json.hpp>

#include "arbocoh/shapes.hpp"

namespace arbocoh {

/// {"q": 2, "vertices": ["a", ...], "edges": [["a", "b"], ...]}
Shape shape_from_json(const nlohmann::json& j);
nlohmann::ordered_json shape_to_json(const Shape& s);

nlohmann::ordered_json vertex_to_json(const Vertex& v);
Vertex vertex_from_json(const nlohmann::json& j);
/// Placement as an array of vertex words, indexed like the shape's vertices.
nlohmann::ordered_json embedding_to_json(const EmbeddedSubtree& e);

}  // namespace arbocoh

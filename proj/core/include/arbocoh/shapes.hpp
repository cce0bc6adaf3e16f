#pragma once

// Finite complete subtrees ("shapes") as abstract trees, and their placements in T_q.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arbocoh/tree.hpp"

namespace arbocoh {

/// Abstract finite tree with opaque vertex ids. Vertices are addressed by index
/// 0..size()-1; ids only matter for I/O.
class Shape {
 public:
  /// Throws NotATree on cycles, disconnection or repeated edges and InvalidShape
  /// when a degree exceeds q + 1.
  Shape(int q, std::vector<std::string> ids, const std::vector<std::pair<int, int>>& edges);

  int q() const noexcept { return q_; }
  int size() const noexcept { return static_cast<int>(ids_.size()); }
  const std::string& id(int i) const { return ids_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  /// Index of an id, or -1.
  int index_of(const std::string& id) const;

  const std::vector<int>& adjacent(int i) const { return adj_.at(static_cast<std::size_t>(i)); }
  int degree(int i) const { return static_cast<int>(adjacent(i).size()); }
  bool is_internal(int i) const { return degree(i) == q_ + 1; }
  std::vector<int> internal_vertices() const;
  /// Edges (a, b) with a < b, sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int q_;
  std::vector<std::string> ids_;
  std::vector<std::vector<int>> adj_;
};

using VertexSet = std::vector<int>;  // sorted shape-vertex indices

bool validate_complete(const Shape& s);
int diameter(const Shape& s);
/// Distances from `source` to every shape vertex.
std::vector<int> shape_distances(const Shape& s, int source);

/// Every complete subtree of s (including s itself), sorted.
std::vector<VertexSet> complete_subtrees(const Shape& s);
/// Throws TooSmall when diameter(s) < 2.
std::vector<VertexSet> maximal_proper_complete_subtrees(const Shape& s);
/// Throws TooSmall when diameter(s) <= 2.
std::vector<VertexSet> heads(const Shape& s);
/// Smallest subtree of s containing `vertices`.
VertexSet spanning_subtree(const Shape& s, const VertexSet& vertices);

struct ShapeClass {
  enum class Tag { Vertex, Edge, Centipede, MultiHeaded };
  Tag tag = Tag::Vertex;
  int k = 0;      // centipede length, or diameter for the other tags
  int heads = 0;  // 0 when heads are undefined (diameter <= 2)

  std::string to_string() const;
  friend bool operator==(const ShapeClass&, const ShapeClass&) = default;
};

/// Throws InvalidShape when s is not complete.
ShapeClass classify_shape(const Shape& s);

// Builders. Internal vertices come first (v0, v1, ...), then leaves.
Shape vertex_shape(int q);
Shape edge_shape(int q);
/// Pads a tree on `n_internal` vertices with leaves until every vertex has degree q + 1.
Shape complete_hull(int q, int n_internal, const std::vector<std::pair<int, int>>& internal_edges);
Shape star_shape(int q);
/// k >= 2; the internal vertices form a path v0 - v1 - ... - v_{k-2}.
Shape centipede_shape(int q, int k);
/// One internal vertex with q + 1 internal neighbours.
Shape y_shape(int q);

/// All complete shapes up to isomorphism with diameter <= max_diameter, ordered by
/// (size, canonical form). Includes the vertex and edge shapes.
std::vector<Shape> enumerate_complete_shapes(int q, int max_diameter);

/// Canonical string of an unlabeled tree given as adjacency lists (center-rooted AHU).
std::string tree_canonical_code(const std::vector<std::vector<int>>& adj);

struct EmbeddedSubtree {
  std::shared_ptr<const Shape> shape;
  std::vector<Vertex> placement;  // indexed by shape vertex

  std::vector<Vertex> image() const;  // sorted
  std::optional<int> preimage(const Vertex& v) const;
  bool is_internal_image(const Vertex& v) const;

  friend bool operator==(const EmbeddedSubtree& a, const EmbeddedSubtree& b) {
    return a.placement == b.placement;
  }
};

/// Checks injectivity and adjacency of a placement; throws InvalidArgument otherwise.
EmbeddedSubtree make_embedding(std::shared_ptr<const Shape> shape, std::vector<Vertex> placement);

/// All placements of s inside B(anchor, radius), one per image vertex set, sorted by
/// image. Throws InvalidShape when s is not complete.
std::vector<EmbeddedSubtree> enumerate_embeddings(const Shape& s, const Vertex& anchor, int radius);

/// The median of the triple is an internal vertex of the image.
bool hits(const EmbeddedSubtree& e, const RayPrefix& g0, const RayPrefix& g1, const RayPrefix& g2);

/// Embeddings of s hitting the triple. Throws NotCuspidalShape when diameter(s) < 2.
int count_hitting(const Shape& s, const RayPrefix& g0, const RayPrefix& g1, const RayPrefix& g2);

}  // namespace arbocoh

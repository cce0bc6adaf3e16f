#pragma once

#include <map>
#include <random>
#include <vector>

#include "arbocoh/tree.hpp"

namespace arbocoh {

/// Isomorphism between two finite subtrees of T_q, standing in for an element of
/// Aut(T_q). The domain is any connected vertex set; it need not contain o.
class TreeIsometry {
 public:
  TreeIsometry() = default;

  /// Validates injectivity, connectivity of the domain and adjacency preservation.
  TreeIsometry(TreeParams tree, std::map<Vertex, Vertex> mapping);

  static TreeIsometry identity(TreeParams tree, const std::vector<Vertex>& domain);

  const TreeParams& tree() const noexcept { return tree_; }
  const std::map<Vertex, Vertex>& mapping() const noexcept { return map_; }
  std::size_t size() const noexcept { return map_.size(); }
  bool contains(const Vertex& v) const { return map_.count(v) != 0; }

  /// The unique vertex of minimal depth in the domain.
  const Vertex& root_most() const;

  Vertex apply(const Vertex& v) const;
  /// Image of the cylinder through p.end(). The result is a root-based prefix and
  /// can be shorter than p; InsufficientDepth when the image cylinder contains o.
  RayPrefix apply(const RayPrefix& p) const;

  TreeIsometry inverse() const;
  /// this ∘ other, on the vertices of other's domain that land in this domain.
  TreeIsometry compose(const TreeIsometry& other) const;

  friend bool operator==(const TreeIsometry& a, const TreeIsometry& b) {
    return a.tree_.q == b.tree_.q && a.map_ == b.map_;
  }

 private:
  TreeParams tree_;
  std::map<Vertex, Vertex> map_;
  Vertex root_most_;
};

/// Canonical extension to the ball of radius `target_depth` around f.root_most().
/// At every vertex the missing neighbours are paired with the missing neighbours of
/// the image in increasing word order.
TreeIsometry extend_isometry(const TreeIsometry& f, int target_depth);

/// Same as extend_isometry but the pairings are drawn uniformly at random.
TreeIsometry extend_isometry_random(const TreeIsometry& f, int target_depth, std::mt19937_64& rng);

/// Extends f along the geodesics from f.root_most() to each target. New vertices go
/// to the smallest free neighbour of their image, or a random one when rng is given.
TreeIsometry extend_to_cover(const TreeIsometry& f, const std::vector<Vertex>& targets,
                             std::mt19937_64* rng = nullptr);

/// Random element of Aut(T_q) restricted to B(o, radius): o goes to a uniform vertex
/// of B(o, max_shift) and all branch pairings are random.
TreeIsometry random_isometry(const TreeParams& tree, int radius, int max_shift, std::mt19937_64& rng);

}  // namespace arbocoh

#pragma once

#include <vector>

#include "arbocoh/isometry.hpp"
#include "arbocoh/shapes.hpp"

namespace arbocoh {

struct FlipWitness {
  int i = 0;
  int j = 0;
  /// Order-2 branch swap at `secondary_median`, restricted to the ancestor closure
  /// of the ray prefixes, the subtree and o.
  TreeIsometry h;
  /// Every ray prefix is mapped exactly up to this depth.
  int certified_depth = 0;
  Vertex median;
  Vertex secondary_median;
};

/// Finds i != j and an isometry h with h(g_i) = g_j, h(g_j) = g_i, fixing every other
/// ray and every vertex of `subtree`. Rays longer than `depth` are truncated first;
/// depth > 3 * (longest pairwise common prefix) always suffices.
/// Throws SubtreeHitsTriple when the subtree hits (g0, g1, g2), NotDistinct or
/// InsufficientDepth when the prefixes are too short.
FlipWitness find_flip(const TreeParams& tree, const std::vector<RayPrefix>& rays,
                      const std::vector<Vertex>& subtree, int depth);
FlipWitness find_flip(const TreeParams& tree, const std::vector<RayPrefix>& rays,
                      const EmbeddedSubtree& subtree, int depth);

/// Checks the three witness properties prefix-exactly; returns an empty string on
/// success and a description of the first failure otherwise.
std::string check_flip(const FlipWitness& w, const std::vector<RayPrefix>& rays,
                       const std::vector<Vertex>& subtree);

}  // namespace arbocoh

#pragma once

// Seeded random instances shared by the verification suites, tests and benchmarks.

#include <optional>
#include <random>
#include <vector>

#include "arbocoh/shapes.hpp"

namespace arbocoh {

RayPrefix random_ray(const TreeParams& tree, int depth, std::mt19937_64& rng);

/// `count` rays of the given depth whose pairwise common prefixes are at most
/// `max_lcp` long (rejection sampling).
std::vector<RayPrefix> random_distinct_rays(const TreeParams& tree, int count, int depth, int max_lcp,
                                            std::mt19937_64& rng);

/// Uniform vertex of B(o, radius).
Vertex random_vertex(const TreeParams& tree, int radius, std::mt19937_64& rng);

/// A random placement of s inside B(anchor, radius) that misses (g0, g1, g2), if any.
std::optional<EmbeddedSubtree> random_missing_embedding(const Shape& s, const Vertex& anchor, int radius,
                                                        const RayPrefix& g0, const RayPrefix& g1,
                                                        const RayPrefix& g2, std::mt19937_64& rng);

struct FlipInstance {
  TreeParams tree;
  std::vector<RayPrefix> rays;
  std::vector<Vertex> subtree;  // empty or the image of a complete subtree missing rays 0..2
};

/// q in {2, 3}, 3 to 7 rays of the given depth with pairwise common prefixes shorter
/// than depth / 3 (enough for find_flip), and in half of the cases a random
/// complete subtree of diameter at most 3 missing the leading triple.
FlipInstance random_flip_instance(int depth, std::mt19937_64& rng);

}  // namespace arbocoh

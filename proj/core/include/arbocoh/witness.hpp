#pragma once

// Explicit alternating 2-cochain on pairs of boundary points with values in the
// functions on embedded copies of a centipede. It represents a nonzero class in
// degree 2 whenever V^Q(x,y) differs from V^Q~(x,y).

#include <memory>
#include <optional>

#include <Eigen/Dense>

#include "arbocoh/irrep.hpp"
#include "arbocoh/isometry.hpp"

namespace arbocoh {

struct WitnessContext {
  TreeParams tree;
  std::shared_ptr<const Shape> shape;
  PermGroup aut;
  int x = -1;  // canonical admissible pair
  int y = -1;
  PermGroup q_pointwise;  // Q(x, y)
  PermGroup q_setwise;    // Q~(x, y)
  Permutation swap;       // an element of Q~ \ Q
  EmbeddedSubtree reference;  // S_0, its own canonical section
  RayPrefix gamma0;           // leaves S_0 through the image of x
  RayPrefix gamma1;           // leaves S_0 through the image of y
};

/// Builds the reference configuration: S_0 is the first embedding around o, relabelled
/// to its lexicographically smallest placement. Throws NotACentipede, and
/// InvalidArgument when ray_depth does not clear S_0 by two levels.
WitnessContext make_witness_context(std::shared_ptr<const Shape> shape, int ray_depth);

/// Unit vector of V^Q with zero projection on V^Q~. Throws BadVector when the two
/// invariant spaces coincide.
Eigen::VectorXcd witness_vector(const WitnessContext& ctx, const IrrepModel& m);

/// Lexicographically smallest placement of e's image, as the automorphism tau with
/// section = placement ∘ tau.
Permutation section_relabel(const WitnessContext& ctx, const EmbeddedSubtree& e);

/// s_{fe}^{-1} ∘ f ∘ s_e as a permutation of shape vertices. f must be defined on e.
Permutation induced_automorphism(const WitnessContext& ctx, const TreeIsometry& f, const EmbeddedSubtree& e);

/// alpha(g, h)(e): rho(s_e^{-1} phi) v when e meets the geodesic (g, h) in a segment
/// of full diameter, phi being the placement sending x to the g-end and y to the
/// h-end of that segment; nullopt otherwise. Rays are cut to `depth`. Throws
/// BadVector, NotDistinct and InsufficientDepth.
std::optional<Eigen::VectorXcd> witness_cochain(const WitnessContext& ctx, const IrrepModel& m,
                                                const Eigen::VectorXcd& v, const RayPrefix& g,
                                                const RayPrefix& h, const EmbeddedSubtree& e, int depth);

/// (d alpha)(g0, g1, g2)(e) = alpha(g1, g2) - alpha(g0, g2) + alpha(g0, g1).
Eigen::VectorXcd witness_coboundary(const WitnessContext& ctx, const IrrepModel& m, const Eigen::VectorXcd& v,
                                    const RayPrefix& g0, const RayPrefix& g1, const RayPrefix& g2,
                                    const EmbeddedSubtree& e, int depth);

}  // namespace arbocoh

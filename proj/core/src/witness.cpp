#include "arbocoh/witness.hpp"

#include <algorithm>

#include "arbocoh/classify.hpp"
#include "arbocoh/error.hpp"

namespace arbocoh {

namespace {

std::vector<Vertex> relabel(const std::vector<Vertex>& placement, const Permutation& tau) {
  std::vector<Vertex> out(placement.size());
  for (std::size_t i = 0; i < placement.size(); ++i) out[i] = placement[static_cast<std::size_t>(tau[i])];
  return out;
}

// A root-based ray whose boundary point is reached from leaf vertex `v` of the
// image by stepping to its smallest neighbour outside the image.
RayPrefix ray_leaving(const TreeParams& tree, const EmbeddedSubtree& e, const Vertex& v, int depth) {
  const auto image = e.image();
  Vertex u;
  bool found = false;
  for (const auto& n : neighbors(tree, v)) {
    if (!std::binary_search(image.begin(), image.end(), n) && (!found || n < u)) {
      u = n;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::InvalidArgument, "vertex has no neighbour outside the embedding");
  Vertex end = u;
  if (v.depth() > 0 && u == v.parent()) {
    for (const auto& c : neighbors(tree, u)) {
      if (c.depth() > u.depth() && c != v) {
        end = c;
        break;
      }
    }
  }
  while (end.depth() < depth) end = end.child(0);
  return RayPrefix(end);
}

RayPrefix cut(const RayPrefix& r, int depth) {
  return r.depth() <= depth ? r : RayPrefix(r.end().prefix(depth));
}

}  // namespace

Permutation section_relabel(const WitnessContext& ctx, const EmbeddedSubtree& e) {
  const Permutation* best = nullptr;
  std::vector<Vertex> best_placement;
  for (const auto& tau : ctx.aut.elements()) {
    auto p = relabel(e.placement, tau);
    if (!best || p < best_placement) {
      best = &tau;
      best_placement = std::move(p);
    }
  }
  return *best;
}

WitnessContext make_witness_context(std::shared_ptr<const Shape> shape, int ray_depth) {
  if (!shape) throw Error(ErrorKind::InvalidArgument, "missing shape");
  if (classify_shape(*shape).tag != ShapeClass::Tag::Centipede) {
    throw Error(ErrorKind::NotACentipede, "witness cochains are defined for centipedes");
  }
  WitnessContext ctx;
  ctx.tree = TreeParams(shape->q());
  ctx.shape = shape;
  ctx.aut = shape_automorphism_group(*shape);
  std::tie(ctx.x, ctx.y) = admissible_pairs(*shape).front();
  const std::vector<int> pts{std::min(ctx.x, ctx.y), std::max(ctx.x, ctx.y)};
  ctx.q_pointwise = pointwise_stabilizer(ctx.aut, pts);
  ctx.q_setwise = setwise_stabilizer(ctx.aut, pts);
  for (const auto& p : ctx.q_setwise.elements()) {
    if (!ctx.q_pointwise.contains(p)) {
      ctx.swap = p;
      break;
    }
  }

  const EmbeddedSubtree first = enumerate_embeddings(*shape, Vertex{}, diameter(*shape)).front();
  ctx.reference = make_embedding(shape, relabel(first.placement, section_relabel(ctx, first)));
  int deepest = 0;
  for (const auto& v : ctx.reference.placement) deepest = std::max(deepest, v.depth());
  if (ray_depth < deepest + 2) throw Error(ErrorKind::InvalidArgument, "ray depth too small for the reference");
  ctx.gamma0 = ray_leaving(ctx.tree, ctx.reference, ctx.reference.placement[ctx.x], ray_depth);
  ctx.gamma1 = ray_leaving(ctx.tree, ctx.reference, ctx.reference.placement[ctx.y], ray_depth);
  return ctx;
}

Eigen::VectorXcd witness_vector(const WitnessContext& ctx, const IrrepModel& m) {
  const Eigen::MatrixXcd pq = invariant_projector(m, ctx.q_pointwise);
  const Eigen::MatrixXcd anti = (pq - m(ctx.swap) * pq) / 2.0;
  Eigen::Index best = 0;
  for (Eigen::Index j = 1; j < anti.cols(); ++j) {
    if (anti.col(j).norm() > anti.col(best).norm()) best = j;
  }
  if (anti.col(best).norm() < 1e-8) throw Error(ErrorKind::BadVector, "V^Q equals V^Q~");
  return anti.col(best).normalized();
}

Permutation induced_automorphism(const WitnessContext& ctx, const TreeIsometry& f, const EmbeddedSubtree& e) {
  std::vector<Vertex> moved;
  moved.reserve(e.placement.size());
  for (const auto& v : e.placement) moved.push_back(f.apply(v));
  const EmbeddedSubtree fe = make_embedding(e.shape, std::move(moved));
  // s_e = placement ∘ tau and s_fe = f ∘ placement ∘ tau', so the induced map is tau'^{-1} tau.
  return compose(inverse(section_relabel(ctx, fe)), section_relabel(ctx, e));
}

std::optional<Eigen::VectorXcd> witness_cochain(const WitnessContext& ctx, const IrrepModel& m,
                                                const Eigen::VectorXcd& v, const RayPrefix& g,
                                                const RayPrefix& h, const EmbeddedSubtree& e, int depth) {
  const Eigen::MatrixXcd pq = invariant_projector(m, ctx.q_pointwise);
  const Eigen::MatrixXcd pqt = invariant_projector(m, ctx.q_setwise);
  if ((pq * v - v).norm() > 1e-8 || (pqt * v).norm() > 1e-8) {
    throw Error(ErrorKind::BadVector, "v must be Q-invariant with no Q~-invariant part");
  }

  const RayPrefix gc = cut(g, depth);
  const RayPrefix hc = cut(h, depth);
  const int l = lcp_length(gc.end(), hc.end());
  if (l == gc.depth() || l == hc.depth()) {
    if (gc == hc) throw Error(ErrorKind::NotDistinct, "rays agree to the given depth");
    throw Error(ErrorKind::InsufficientDepth, "rays are not separated within the given depth");
  }

  // Position along the geodesic, increasing from the g-end to the h-end.
  int lo = 0, hi = 0, lo_index = -1, hi_index = -1;
  for (std::size_t i = 0; i < e.placement.size(); ++i) {
    const Vertex& u = e.placement[i];
    if (u.depth() < l) continue;
    if (u.depth() > gc.depth() || u.depth() > hc.depth()) {
      throw Error(ErrorKind::InsufficientDepth, "embedding reaches below the ray prefixes");
    }
    std::optional<int> pos;
    if (gc.at(u.depth()) == u) pos = l - u.depth();
    if (hc.at(u.depth()) == u) pos = u.depth() - l;
    if (!pos) continue;
    if (lo_index < 0 || *pos < lo) lo = *pos, lo_index = static_cast<int>(i);
    if (hi_index < 0 || *pos > hi) hi = *pos, hi_index = static_cast<int>(i);
  }
  if (lo_index < 0 || hi - lo != diameter(*e.shape)) return std::nullopt;

  const Permutation* sigma = nullptr;
  for (const auto& p : ctx.aut.elements()) {
    if (p[ctx.x] == lo_index && p[ctx.y] == hi_index) {
      sigma = &p;
      break;
    }
  }
  if (!sigma) return std::nullopt;
  const Permutation value = compose(inverse(section_relabel(ctx, e)), *sigma);
  return Eigen::VectorXcd(m(value) * v);
}

Eigen::VectorXcd witness_coboundary(const WitnessContext& ctx, const IrrepModel& m, const Eigen::VectorXcd& v,
                                    const RayPrefix& g0, const RayPrefix& g1, const RayPrefix& g2,
                                    const EmbeddedSubtree& e, int depth) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
  if (auto a = witness_cochain(ctx, m, v, g1, g2, e, depth)) out += *a;
  if (auto a = witness_cochain(ctx, m, v, g0, g2, e, depth)) out -= *a;
  if (auto a = witness_cochain(ctx, m, v, g0, g1, e, depth)) out += *a;
  return out;
}

}  // namespace arbocoh

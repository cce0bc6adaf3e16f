#include "arbocoh/sampling.hpp"

#include <memory>

#include "arbocoh/error.hpp"

namespace arbocoh {

RayPrefix random_ray(const TreeParams& tree, int depth, std::mt19937_64& rng) {
  std::vector<Label> word;
  word.reserve(static_cast<std::size_t>(depth));
  for (int t = 0; t < depth; ++t) {
    std::uniform_int_distribution<int> label(0, tree.labels_at(t) - 1);
    word.push_back(static_cast<Label>(label(rng)));
  }
  return RayPrefix(Vertex(std::move(word)));
}

std::vector<RayPrefix> random_distinct_rays(const TreeParams& tree, int count, int depth, int max_lcp,
                                            std::mt19937_64& rng) {
  if (max_lcp >= depth) throw Error(ErrorKind::InvalidArgument, "max_lcp must be below the depth");
  std::vector<RayPrefix> rays;
  for (int attempts = 0; static_cast<int>(rays.size()) < count; ++attempts) {
    if (attempts > 10000) throw Error(ErrorKind::InvalidArgument, "too many rays for the lcp bound");
    RayPrefix r = random_ray(tree, depth, rng);
    bool ok = true;
    for (const auto& s : rays) ok = ok && lcp_length(r.end(), s.end()) <= max_lcp;
    if (ok) rays.push_back(std::move(r));
  }
  return rays;
}

Vertex random_vertex(const TreeParams& tree, int radius, std::mt19937_64& rng) {
  const auto all = ball(tree, Vertex{}, radius);
  return all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
}

std::optional<EmbeddedSubtree> random_missing_embedding(const Shape& s, const Vertex& anchor, int radius,
                                                        const RayPrefix& g0, const RayPrefix& g1,
                                                        const RayPrefix& g2, std::mt19937_64& rng) {
  std::vector<EmbeddedSubtree> missing;
  for (auto& e : enumerate_embeddings(s, anchor, radius)) {
    if (!hits(e, g0, g1, g2)) missing.push_back(std::move(e));
  }
  if (missing.empty()) return std::nullopt;
  return missing[std::uniform_int_distribution<std::size_t>(0, missing.size() - 1)(rng)];
}

FlipInstance random_flip_instance(int depth, std::mt19937_64& rng) {
  FlipInstance inst;
  inst.tree = TreeParams(std::uniform_int_distribution<int>(2, 3)(rng));
  const int count = std::uniform_int_distribution<int>(3, 7)(rng);
  inst.rays = random_distinct_rays(inst.tree, count, depth, (depth - 1) / 3, rng);
  if (std::bernoulli_distribution(0.5)(rng)) {
    const auto shapes = enumerate_complete_shapes(inst.tree.q, 3);
    const Shape& s = shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng)];
    const Vertex anchor = random_vertex(inst.tree, 2, rng);
    if (auto e = random_missing_embedding(s, anchor, diameter(s), inst.rays[0], inst.rays[1], inst.rays[2], rng)) {
      inst.subtree = e->image();
    }
  }
  return inst;
}

}  // namespace arbocoh

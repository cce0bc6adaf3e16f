#include "arbocoh/flip.hpp"

#include <algorithm>
#include <set>

#include "arbocoh/error.hpp"

namespace arbocoh {

namespace {

struct SwapPlan {
  Vertex center;             // m'
  std::vector<Vertex> ray_i;  // [m', g_i) up to the prefix end, m' first
  std::vector<Vertex> ray_j;
};

// Path from m' towards the boundary point of g, continued past the prefix end with
// label 0 until it has `length` vertices. Beyond the prefix the continuation is a
// convention; the certified depth records how much of it is data.
std::vector<Vertex> ray_from(const Vertex& m, const RayPrefix& g, std::size_t length) {
  if (lcp_length(m, g.end()) >= g.depth()) {
    throw Error(ErrorKind::InsufficientDepth, "ray prefix ends before leaving " + m.to_string());
  }
  auto path = geodesic(m, g.end());
  while (path.size() < length) path.push_back(path.back().child(0));
  return path;
}

// Forward neighbours of b (away from prev_b) paired with those of a; the ray
// continuation is matched first, the rest in increasing word order.
Vertex paired_step(const TreeParams& tree, const Vertex& a, const Vertex& prev_a, const Vertex& next_a,
                   const Vertex& b, const Vertex& prev_b, const Vertex* ray_next_a,
                   const Vertex* ray_next_b) {
  std::vector<Vertex> fa, fb;
  for (auto& n : neighbors(tree, a)) {
    if (n != prev_a && (!ray_next_a || n != *ray_next_a)) fa.push_back(std::move(n));
  }
  for (auto& n : neighbors(tree, b)) {
    if (n != prev_b && (!ray_next_b || n != *ray_next_b)) fb.push_back(std::move(n));
  }
  if (ray_next_a && next_a == *ray_next_a) return *ray_next_b;
  auto it = std::find(fa.begin(), fa.end(), next_a);
  return fb.at(static_cast<std::size_t>(it - fa.begin()));
}

Vertex swap_image(const TreeParams& tree, const SwapPlan& plan, const Vertex& v) {
  if (v == plan.center) return v;
  const auto path = geodesic(plan.center, v);
  const bool in_i = path[1] == plan.ray_i[1];
  const bool in_j = path[1] == plan.ray_j[1];
  if (!in_i && !in_j) return v;
  const auto& src = in_i ? plan.ray_i : plan.ray_j;
  const auto& dst = in_i ? plan.ray_j : plan.ray_i;

  Vertex b = dst[1];
  Vertex prev_b = plan.center;
  bool on_ray = true;
  for (std::size_t t = 1; t + 1 < path.size(); ++t) {
    const Vertex& a = path[t];
    Vertex next_b;
    if (on_ray) {
      next_b = paired_step(tree, a, path[t - 1], path[t + 1], b, prev_b, &src[t + 1], &dst[t + 1]);
      on_ray = path[t + 1] == src[t + 1];
    } else {
      next_b = paired_step(tree, a, path[t - 1], path[t + 1], b, prev_b, nullptr, nullptr);
    }
    prev_b = b;
    b = std::move(next_b);
  }
  return b;
}

bool misses_with(const std::vector<RayPrefix>& rays, const std::vector<Vertex>& subtree, const Vertex& m,
                 int b, int c) {
  for (const auto& x : subtree) {
    if (gromov_product(rays[b], x, m) != 0 || gromov_product(rays[c], x, m) != 0) return false;
  }
  return true;
}

int max_pairwise_lcp(const std::vector<RayPrefix>& rays) {
  int best = 0;
  for (std::size_t a = 0; a < rays.size(); ++a) {
    for (std::size_t b = a + 1; b < rays.size(); ++b) {
      best = std::max(best, lcp_length(rays[a].end(), rays[b].end()));
    }
  }
  return best;
}

// Smallest agreement length between h(g_k) and the expected target ray, or -1 on a
// mismatch.
int agreement_depth(const FlipWitness& w, const std::vector<RayPrefix>& rays) {
  int certified = -1;
  for (std::size_t k = 0; k < rays.size(); ++k) {
    const std::size_t target = k == static_cast<std::size_t>(w.i)   ? static_cast<std::size_t>(w.j)
                               : k == static_cast<std::size_t>(w.j) ? static_cast<std::size_t>(w.i)
                                                                    : k;
    const RayPrefix image = w.h.apply(rays[k]);
    const int common = std::min(image.depth(), rays[target].depth());
    if (lcp_length(image.end(), rays[target].end()) < common) return -1;
    certified = certified < 0 ? common : std::min(certified, common);
  }
  return certified;
}

}  // namespace

FlipWitness find_flip(const TreeParams& tree, const std::vector<RayPrefix>& input,
                      const std::vector<Vertex>& subtree, int depth) {
  if (input.size() < 3) throw Error(ErrorKind::InvalidArgument, "flip needs at least three rays");
  std::vector<RayPrefix> rays;
  for (const auto& r : input) {
    check_vertex(tree, r.end());
    rays.emplace_back(r.depth() > depth ? r.at(depth) : r.end());
  }
  for (const auto& x : subtree) check_vertex(tree, x);
  const int n = static_cast<int>(rays.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) (void)gromov_product(rays[a], rays[b], Vertex{});
  }

  FlipWitness w;
  w.median = median(rays[0], rays[1], rays[2]);
  const Vertex& m = w.median;

  int b = -1, c = -1;
  for (auto [pb, pc] : {std::pair{1, 2}, std::pair{0, 2}, std::pair{0, 1}}) {
    if (misses_with(rays, subtree, m, pb, pc)) {
      b = pb;
      c = pc;
      break;
    }
  }
  if (b < 0) throw Error(ErrorKind::SubtreeHitsTriple, "subtree hits the leading triple");

  std::vector<int> j0;
  for (int k = 0; k < n; ++k) {
    if (k == b || k == c || gromov_product(rays[k], rays[b], m) > 0 || gromov_product(rays[k], rays[c], m) > 0) {
      j0.push_back(k);
    }
  }
  int best = -1;
  for (std::size_t x = 0; x < j0.size(); ++x) {
    for (std::size_t y = x + 1; y < j0.size(); ++y) {
      const int g = gromov_product(rays[j0[x]], rays[j0[y]], m);
      if (g > best) {
        best = g;
        w.i = j0[x];
        w.j = j0[y];
      }
    }
  }
  w.secondary_median = median(m, rays[w.i], rays[w.j]);

  std::set<Vertex> domain;
  auto add_ancestors = [&domain](const Vertex& v) {
    for (int d = 0; d <= v.depth(); ++d) domain.insert(v.prefix(d));
  };
  for (const auto& r : rays) add_ancestors(r.end());
  for (const auto& x : subtree) add_ancestors(x);
  add_ancestors(w.secondary_median);

  std::size_t reach = 0;
  for (const auto& v : domain) reach = std::max(reach, static_cast<std::size_t>(distance(v, w.secondary_median)));
  SwapPlan plan{w.secondary_median, ray_from(w.secondary_median, rays[w.i], reach + 2),
                ray_from(w.secondary_median, rays[w.j], reach + 2)};

  std::map<Vertex, Vertex> mapping;
  for (const auto& v : domain) mapping.emplace(v, swap_image(tree, plan, v));
  w.h = TreeIsometry(tree, std::move(mapping));

  w.certified_depth = agreement_depth(w, rays);
  if (w.certified_depth <= max_pairwise_lcp(rays)) {
    throw Error(ErrorKind::InsufficientDepth, "flipped prefixes do not separate the rays");
  }
  return w;
}

FlipWitness find_flip(const TreeParams& tree, const std::vector<RayPrefix>& rays,
                      const EmbeddedSubtree& subtree, int depth) {
  return find_flip(tree, rays, subtree.placement, depth);
}

std::string check_flip(const FlipWitness& w, const std::vector<RayPrefix>& rays,
                       const std::vector<Vertex>& subtree) {
  if (w.i == w.j) return "indices coincide";
  for (const auto& x : subtree) {
    if (!w.h.contains(x) || w.h.apply(x) != x) return "subtree vertex " + x.to_string() + " moves";
  }
  for (const auto& [v, hv] : w.h.mapping()) {
    if (w.h.contains(hv) && w.h.apply(hv) != v) return "not an involution at " + v.to_string();
  }
  int certified = -1;
  try {
    certified = agreement_depth(w, rays);
  } catch (const Error& e) {
    return e.what();
  }
  if (certified < 0) return "a ray image disagrees with its target";
  if (certified <= max_pairwise_lcp(rays)) return "certified depth does not separate the rays";
  return {};
}

}  // namespace arbocoh

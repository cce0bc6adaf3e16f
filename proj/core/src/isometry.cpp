#include "arbocoh/isometry.hpp"

#include <algorithm>
#include <set>

#include "arbocoh/error.hpp"

namespace arbocoh {

namespace {

bool adjacent(const Vertex& a, const Vertex& b) {
  return (!a.is_root() && a.parent() == b) || (!b.is_root() && b.parent() == a);
}

}  // namespace

TreeIsometry::TreeIsometry(TreeParams tree, std::map<Vertex, Vertex> mapping)
    : tree_(tree), map_(std::move(mapping)) {
  if (map_.empty()) throw Error(ErrorKind::InvalidArgument, "isometry with empty domain");
  std::set<Vertex> image;
  std::size_t edges = 0;
  root_most_ = map_.begin()->first;
  for (const auto& [v, w] : map_) {
    check_vertex(tree_, v);
    check_vertex(tree_, w);
    if (!image.insert(w).second) throw Error(ErrorKind::InvalidArgument, "isometry is not injective");
    if (v.depth() < root_most_.depth()) root_most_ = v;
    if (v.is_root()) continue;
    auto it = map_.find(v.parent());
    if (it == map_.end()) continue;
    ++edges;
    if (!adjacent(it->second, w)) {
      throw Error(ErrorKind::InvalidArgument, "isometry breaks the edge at " + v.to_string());
    }
  }
  // A vertex set in a tree spans a forest; it is connected iff it has |V| - 1 edges.
  if (edges + 1 != map_.size()) throw Error(ErrorKind::InvalidArgument, "isometry domain is not connected");
}

TreeIsometry TreeIsometry::identity(TreeParams tree, const std::vector<Vertex>& domain) {
  std::map<Vertex, Vertex> m;
  for (const auto& v : domain) m.emplace(v, v);
  return TreeIsometry(tree, std::move(m));
}

const Vertex& TreeIsometry::root_most() const {
  if (map_.empty()) throw Error(ErrorKind::OutOfDomain, "empty isometry");
  return root_most_;
}

Vertex TreeIsometry::apply(const Vertex& v) const {
  auto it = map_.find(v);
  if (it == map_.end()) throw Error(ErrorKind::OutOfDomain, "vertex " + v.to_string() + " not in domain");
  return it->second;
}

RayPrefix TreeIsometry::apply(const RayPrefix& p) const {
  const Vertex ho = apply(Vertex{});
  const Vertex he = apply(p.end());
  if (he.is_prefix_of(ho)) {
    throw Error(ErrorKind::InsufficientDepth,
                "image of prefix " + p.end().to_string() + " does not separate from o");
  }
  return RayPrefix(he);
}

TreeIsometry TreeIsometry::inverse() const {
  std::map<Vertex, Vertex> inv;
  for (const auto& [v, w] : map_) inv.emplace(w, v);
  return TreeIsometry(tree_, std::move(inv));
}

TreeIsometry TreeIsometry::compose(const TreeIsometry& other) const {
  std::map<Vertex, Vertex> m;
  for (const auto& [v, w] : other.map_) {
    auto it = map_.find(w);
    if (it != map_.end()) m.emplace(v, it->second);
  }
  if (m.empty()) throw Error(ErrorKind::OutOfDomain, "domains do not overlap");
  return TreeIsometry(tree_, std::move(m));
}

namespace {

template <class Pairing>
TreeIsometry extend_impl(const TreeIsometry& f, int target_depth, Pairing pair) {
  const TreeParams& tree = f.tree();
  std::map<Vertex, Vertex> m = f.mapping();
  std::set<Vertex> image;
  for (const auto& [v, w] : m) image.insert(w);
  const Vertex r = f.root_most();

  std::vector<Vertex> layer{r};
  std::set<Vertex> seen{r};
  for (int d = 0; d < target_depth; ++d) {
    std::vector<Vertex> next;
    for (const auto& v : layer) {
      const Vertex fv = m.at(v);
      std::vector<Vertex> src;
      for (auto& n : neighbors(tree, v)) {
        if (!m.count(n)) src.push_back(n);
      }
      if (!src.empty()) {
        std::vector<Vertex> dst;
        for (auto& n : neighbors(tree, fv)) {
          if (!image.count(n)) dst.push_back(n);
        }
        pair(dst);
        for (std::size_t i = 0; i < src.size(); ++i) {
          m.emplace(src[i], dst[i]);
          image.insert(dst[i]);
        }
      }
      for (auto& n : neighbors(tree, v)) {
        if (seen.insert(n).second) next.push_back(n);
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  return TreeIsometry(tree, std::move(m));
}

}  // namespace

TreeIsometry extend_isometry(const TreeIsometry& f, int target_depth) {
  return extend_impl(f, target_depth, [](std::vector<Vertex>&) {});
}

TreeIsometry extend_isometry_random(const TreeIsometry& f, int target_depth, std::mt19937_64& rng) {
  return extend_impl(f, target_depth, [&rng](std::vector<Vertex>& dst) {
    std::shuffle(dst.begin(), dst.end(), rng);
  });
}

TreeIsometry extend_to_cover(const TreeIsometry& f, const std::vector<Vertex>& targets, std::mt19937_64* rng) {
  const TreeParams& tree = f.tree();
  std::map<Vertex, Vertex> m = f.mapping();
  std::set<Vertex> image;
  for (const auto& [v, w] : m) image.insert(w);
  for (const auto& t : targets) {
    const auto path = geodesic(f.root_most(), t);
    for (std::size_t i = 1; i < path.size(); ++i) {
      if (m.count(path[i])) continue;
      std::vector<Vertex> free;
      for (auto& n : neighbors(tree, m.at(path[i - 1]))) {
        if (!image.count(n)) free.push_back(n);
      }
      std::size_t k = 0;
      if (rng) k = std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(*rng);
      m.emplace(path[i], free[k]);
      image.insert(free[k]);
    }
  }
  return TreeIsometry(tree, std::move(m));
}

TreeIsometry random_isometry(const TreeParams& tree, int radius, int max_shift, std::mt19937_64& rng) {
  const auto targets = ball(tree, Vertex{}, max_shift);
  std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
  TreeIsometry seed(tree, {{Vertex{}, targets[pick(rng)]}});
  return extend_isometry_random(seed, radius, rng);
}

}  // namespace arbocoh

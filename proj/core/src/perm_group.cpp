#include "arbocoh/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

#include "arbocoh/error.hpp"

namespace arbocoh {

Permutation identity_permutation(int degree) {
  Permutation p(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

void check_permutation(const Permutation& p, int degree) {
  if (static_cast<int>(p.size()) != degree) throw Error(ErrorKind::InvalidArgument, "permutation has wrong degree");
  std::vector<char> hit(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= degree || hit[x]) throw Error(ErrorKind::InvalidArgument, "not a permutation");
    hit[x] = 1;
  }
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
  return h;
}

std::size_t PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? order() : it->second;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](const auto& p) { return other.contains(p); });
}

PermGroup closure(int degree, const std::vector<Permutation>& generators, std::size_t bound) {
  PermGroup g;
  g.degree_ = degree;
  for (const auto& p : generators) check_permutation(p, degree);
  g.generators_ = generators;
  auto add = [&g, bound](Permutation p) {
    if (g.index_.count(p)) return false;
    if (g.elements_.size() >= bound) {
      throw Error(ErrorKind::GroupTooLarge, "group order exceeds " + std::to_string(bound));
    }
    g.index_.emplace(p, g.elements_.size());
    g.elements_.push_back(std::move(p));
    return true;
  };
  add(identity_permutation(degree));
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (const auto& s : generators) add(compose(s, g.elements_[i]));
  }
  return g;
}

PermGroup subgroup_of_elements(const PermGroup& parent, std::vector<Permutation> elements) {
  PermGroup g;
  g.degree_ = parent.degree();
  std::sort(elements.begin(), elements.end(), [&parent](const auto& a, const auto& b) {
    return parent.index_of(a) < parent.index_of(b);
  });
  for (const auto& p : elements) {
    if (!is_identity(p)) g.generators_.push_back(p);
    g.index_.emplace(p, g.elements_.size());
    g.elements_.push_back(p);
  }
  return g;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const PermGroup& g) {
  const std::size_t n = g.order();
  std::vector<char> assigned(n, 0);
  std::vector<Permutation> inverses;
  inverses.reserve(n);
  for (const auto& x : g.elements()) inverses.push_back(inverse(x));
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t j = g.index_of(compose(compose(g.elements()[k], g.elements()[i]), inverses[k]));
      if (!assigned[j]) {
        assigned[j] = 1;
        cls.push_back(j);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  auto smallest = [&g](const std::vector<std::size_t>& cls) {
    return *std::min_element(cls.begin(), cls.end(), [&g](std::size_t a, std::size_t b) {
      return g.elements()[a] < g.elements()[b];
    });
  };
  std::sort(classes.begin(), classes.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return g.elements()[smallest(a)] < g.elements()[smallest(b)];
  });
  return classes;
}

PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<int>& points) {
  std::vector<Permutation> kept;
  for (const auto& p : g.elements()) {
    if (std::all_of(points.begin(), points.end(), [&p](int x) { return p.at(static_cast<std::size_t>(x)) == x; })) {
      kept.push_back(p);
    }
  }
  return subgroup_of_elements(g, std::move(kept));
}

PermGroup setwise_stabilizer(const PermGroup& g, const std::vector<int>& points) {
  std::vector<int> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Permutation> kept;
  for (const auto& p : g.elements()) {
    std::vector<int> image;
    for (int x : sorted) image.push_back(p.at(static_cast<std::size_t>(x)));
    std::sort(image.begin(), image.end());
    if (image == sorted) kept.push_back(p);
  }
  return subgroup_of_elements(g, std::move(kept));
}

PermGroup shape_automorphism_group(const Shape& s, std::size_t bound) {
  const int n = s.size();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) adj[i] = s.adjacent(i);

  // Centers by repeated leaf stripping.
  std::vector<int> centers;
  {
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int i = 0; i < n; ++i) {
      deg[i] = s.degree(i);
      if (deg[i] <= 1) layer.push_back(i);
    }
    int remaining = n;
    if (n <= 2) {
      for (int i = 0; i < n; ++i) centers.push_back(i);
    } else {
      while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer) {
          for (int w : adj[v]) {
            if (--deg[w] == 1) next.push_back(w);
          }
        }
        layer = std::move(next);
      }
      centers = layer;
      std::sort(centers.begin(), centers.end());
    }
  }

  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<std::string> code(static_cast<std::size_t>(n));
  std::function<void(int, int)> build = [&](int v, int p) {
    parent[v] = p;
    std::vector<std::string> kids;
    for (int w : adj[v]) {
      if (w == p) continue;
      build(w, v);
      kids.push_back(code[w]);
    }
    std::sort(kids.begin(), kids.end());
    std::string c = "(";
    for (auto& k : kids) c += k;
    code[v] = c + ")";
  };
  if (centers.size() == 1) {
    build(centers[0], -1);
  } else {
    build(centers[0], centers[1]);
    build(centers[1], centers[0]);
  }

  auto sorted_children = [&](int v) {
    std::vector<int> kids;
    for (int w : adj[v]) {
      if (w != parent[v]) kids.push_back(w);
    }
    std::sort(kids.begin(), kids.end(), [&](int a, int b) {
      return code[a] != code[b] ? code[a] < code[b] : a < b;
    });
    return kids;
  };
  // Canonical isomorphism between two isomorphic rooted subtrees.
  std::function<void(int, int, Permutation&)> map_subtree = [&](int u, int v, Permutation& perm) {
    perm[u] = v;
    auto cu = sorted_children(u);
    auto cv = sorted_children(v);
    for (std::size_t i = 0; i < cu.size(); ++i) map_subtree(cu[i], cv[i], perm);
  };
  auto swap_subtrees = [&](int a, int b) {
    Permutation perm = identity_permutation(n);
    map_subtree(a, b, perm);
    map_subtree(b, a, perm);
    return perm;
  };

  std::vector<Permutation> generators;
  for (int v = 0; v < n; ++v) {
    auto kids = sorted_children(v);
    for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
      if (code[kids[i]] == code[kids[i + 1]]) generators.push_back(swap_subtrees(kids[i], kids[i + 1]));
    }
  }
  if (centers.size() == 2 && code[centers[0]] == code[centers[1]]) {
    generators.push_back(swap_subtrees(centers[0], centers[1]));
  }
  return closure(n, generators, bound);
}

}  // namespace arbocoh

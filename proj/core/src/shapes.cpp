#include "arbocoh/shapes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "arbocoh/error.hpp"

namespace arbocoh {

Shape::Shape(int q, std::vector<std::string> ids, const std::vector<std::pair<int, int>>& edges)
    : q_(q), ids_(std::move(ids)), adj_(ids_.size()) {
  TreeParams check(q);
  (void)check;
  const int n = size();
  if (n == 0) throw Error(ErrorKind::NotATree, "shape has no vertices");
  if (std::set<std::string>(ids_.begin(), ids_.end()).size() != ids_.size()) {
    throw Error(ErrorKind::InvalidArgument, "duplicate vertex id");
  }
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
    if (a == b) throw Error(ErrorKind::NotATree, "self-loop at " + ids_[a]);
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      throw Error(ErrorKind::NotATree, "repeated edge " + ids_[a] + "-" + ids_[b]);
    }
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  if (static_cast<int>(edges.size()) != n - 1) throw Error(ErrorKind::NotATree, "edge count is not |V| - 1");
  std::vector<char> reached(n, 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v]) {
      if (!reached[w]) {
        reached[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != n) throw Error(ErrorKind::NotATree, "shape is disconnected");
  for (int i = 0; i < n; ++i) {
    std::sort(adj_[i].begin(), adj_[i].end());
    if (degree(i) > q_ + 1) throw Error(ErrorKind::InvalidShape, "degree above q+1 at " + ids_[i]);
  }
}

int Shape::index_of(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  return it == ids_.end() ? -1 : static_cast<int>(it - ids_.begin());
}

std::vector<int> Shape::internal_vertices() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (is_internal(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<int, int>> Shape::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    for (int b : adj_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

bool validate_complete(const Shape& s) {
  if (s.size() == 1) return true;
  for (int i = 0; i < s.size(); ++i) {
    if (s.degree(i) != 1 && s.degree(i) != s.q() + 1) return false;
  }
  return true;
}

std::vector<int> shape_distances(const Shape& s, int source) {
  std::vector<int> dist(static_cast<std::size_t>(s.size()), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : s.adjacent(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int diameter(const Shape& s) {
  auto d0 = shape_distances(s, 0);
  int far = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  auto d1 = shape_distances(s, far);
  return *std::max_element(d1.begin(), d1.end());
}

namespace {

VertexSet closure(const Shape& s, const VertexSet& core) {
  std::set<int> out(core.begin(), core.end());
  for (int v : core) out.insert(s.adjacent(v).begin(), s.adjacent(v).end());
  return VertexSet(out.begin(), out.end());
}

// Connected vertex subsets of the internal forest, grown one neighbour at a time.
std::vector<VertexSet> connected_internal_subsets(const Shape& s) {
  std::set<VertexSet> found;
  std::vector<VertexSet> frontier;
  for (int v : s.internal_vertices()) {
    frontier.push_back({v});
    found.insert({v});
  }
  while (!frontier.empty()) {
    std::vector<VertexSet> next;
    for (const auto& set : frontier) {
      for (int v : set) {
        for (int w : s.adjacent(v)) {
          if (!s.is_internal(w) || std::binary_search(set.begin(), set.end(), w)) continue;
          VertexSet grown = set;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), w), w);
          if (found.insert(grown).second) next.push_back(std::move(grown));
        }
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

}  // namespace

// A complete subtree with at least three vertices is determined by its set J of
// degree-(q+1) vertices, which is connected and internal in s; the subtree is then
// J together with all neighbours of J. So the enumeration runs over vertices,
// edges and connected sets of internal vertices.
std::vector<VertexSet> complete_subtrees(const Shape& s) {
  std::set<VertexSet> out;
  for (int i = 0; i < s.size(); ++i) out.insert({i});
  for (auto [a, b] : s.edges()) out.insert({a, b});
  for (const auto& core : connected_internal_subsets(s)) out.insert(closure(s, core));
  return {out.begin(), out.end()};
}

std::vector<VertexSet> maximal_proper_complete_subtrees(const Shape& s) {
  if (s.size() < 3) throw Error(ErrorKind::TooSmall, "shape has diameter below 2");
  std::vector<VertexSet> proper;
  for (auto& c : complete_subtrees(s)) {
    if (static_cast<int>(c.size()) < s.size()) proper.push_back(std::move(c));
  }
  std::vector<VertexSet> out;
  for (const auto& c : proper) {
    bool maximal = true;
    for (const auto& d : proper) {
      if (d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(c);
  }
  return out;
}

VertexSet spanning_subtree(const Shape& s, const VertexSet& vertices) {
  std::vector<char> keep(static_cast<std::size_t>(s.size()), 1);
  std::vector<char> required(static_cast<std::size_t>(s.size()), 0);
  for (int v : vertices) required[v] = 1;
  std::vector<int> deg(static_cast<std::size_t>(s.size()));
  std::vector<int> queue;
  for (int i = 0; i < s.size(); ++i) {
    deg[i] = s.degree(i);
    if (deg[i] <= 1 && !required[i]) queue.push_back(i);
  }
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (!keep[v]) continue;
    keep[v] = 0;
    for (int w : s.adjacent(v)) {
      if (keep[w] && --deg[w] <= 1 && !required[w]) queue.push_back(w);
    }
  }
  VertexSet out;
  for (int i = 0; i < s.size(); ++i) {
    if (keep[i]) out.push_back(i);
  }
  return out;
}

std::vector<VertexSet> heads(const Shape& s) {
  if (diameter(s) <= 2) throw Error(ErrorKind::TooSmall, "heads need diameter above 2");
  std::vector<VertexSet> out;
  for (const auto& sub : maximal_proper_complete_subtrees(s)) {
    VertexSet rest;
    for (int i = 0; i < s.size(); ++i) {
      if (!std::binary_search(sub.begin(), sub.end(), i)) rest.push_back(i);
    }
    out.push_back(spanning_subtree(s, rest));
  }
  return out;
}

std::string ShapeClass::to_string() const {
  switch (tag) {
    case Tag::Vertex: return "vertex";
    case Tag::Edge: return "edge";
    case Tag::Centipede: return "centipede(" + std::to_string(k) + ")";
    case Tag::MultiHeaded: return "multi_headed(" + std::to_string(heads) + "," + std::to_string(k) + ")";
  }
  return "?";
}

ShapeClass classify_shape(const Shape& s) {
  if (!validate_complete(s)) throw Error(ErrorKind::InvalidShape, "shape is not complete");
  if (s.size() == 1) return {ShapeClass::Tag::Vertex, 0, 0};
  if (s.size() == 2) return {ShapeClass::Tag::Edge, 1, 0};
  const int d = diameter(s);
  if (d == 2) return {ShapeClass::Tag::Centipede, 2, 0};
  const int h = static_cast<int>(heads(s).size());
  if (h == 2) return {ShapeClass::Tag::Centipede, d, 2};
  return {ShapeClass::Tag::MultiHeaded, d, h};
}

Shape vertex_shape(int q) { return Shape(q, {"v0"}, {}); }

Shape edge_shape(int q) { return Shape(q, {"v0", "v1"}, {{0, 1}}); }

Shape complete_hull(int q, int n_internal, const std::vector<std::pair<int, int>>& internal_edges) {
  if (n_internal < 1) throw Error(ErrorKind::InvalidArgument, "hull needs an internal vertex");
  std::vector<int> deg(static_cast<std::size_t>(n_internal), 0);
  for (auto [a, b] : internal_edges) {
    ++deg.at(a);
    ++deg.at(b);
  }
  std::vector<std::pair<int, int>> edges = internal_edges;
  int next = n_internal;
  for (int v = 0; v < n_internal; ++v) {
    if (deg[v] > q + 1) throw Error(ErrorKind::InvalidShape, "internal degree above q+1");
    for (int k = deg[v]; k < q + 1; ++k) edges.emplace_back(v, next++);
  }
  std::vector<std::string> ids;
  for (int i = 0; i < next; ++i) ids.push_back("v" + std::to_string(i));
  return Shape(q, std::move(ids), edges);
}

Shape star_shape(int q) { return complete_hull(q, 1, {}); }

Shape centipede_shape(int q, int k) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "centipede length must be at least 2");
  std::vector<std::pair<int, int>> spine;
  for (int i = 0; i + 1 < k - 1; ++i) spine.emplace_back(i, i + 1);
  return complete_hull(q, k - 1, spine);
}

Shape y_shape(int q) {
  std::vector<std::pair<int, int>> arms;
  for (int i = 1; i <= q + 1; ++i) arms.emplace_back(0, i);
  return complete_hull(q, q + 2, arms);
}

namespace {

std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[v]) {
    if (w != parent) kids.push_back(rooted_code(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (auto& k : kids) out += k;
  return out + ")";
}

std::vector<int> tree_centers(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n <= 2) {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int i = 0; i < n; ++i) {
    deg[i] = static_cast<int>(adj[i].size());
    if (deg[i] <= 1) layer.push_back(i);
  }
  int remaining = n;
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
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string tree_canonical_code(const std::vector<std::vector<int>>& adj) {
  auto centers = tree_centers(adj);
  if (centers.size() == 1) return rooted_code(adj, centers[0], -1);
  auto a = rooted_code(adj, centers[0], centers[1]);
  auto b = rooted_code(adj, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

std::vector<Shape> enumerate_complete_shapes(int q, int max_diameter) {
  TreeParams check(q);
  (void)check;
  std::vector<Shape> out;
  if (max_diameter >= 0) out.push_back(vertex_shape(q));
  if (max_diameter >= 1) out.push_back(edge_shape(q));
  if (max_diameter < 2) return out;

  // Internal trees: max degree q + 1, diameter <= max_diameter - 2.
  using Adj = std::vector<std::vector<int>>;
  auto tree_diameter = [](const Adj& adj) {
    auto bfs = [&](int src) {
      std::vector<int> dist(adj.size(), -1);
      std::deque<int> queue{src};
      dist[src] = 0;
      int far = src;
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (dist[v] > dist[far]) far = v;
        for (int w : adj[v]) {
          if (dist[w] < 0) {
            dist[w] = dist[v] + 1;
            queue.push_back(w);
          }
        }
      }
      return std::pair{far, dist[far]};
    };
    return bfs(bfs(0).first).second;
  };

  std::map<std::string, Adj> found;
  std::vector<Adj> frontier{Adj(1)};
  found.emplace(tree_canonical_code(frontier[0]), frontier[0]);
  while (!frontier.empty()) {
    std::vector<Adj> next;
    for (const auto& adj : frontier) {
      const int n = static_cast<int>(adj.size());
      for (int v = 0; v < n; ++v) {
        if (static_cast<int>(adj[v].size()) >= q + 1) continue;
        Adj grown = adj;
        grown.emplace_back(std::vector<int>{v});
        grown[v].push_back(n);
        if (tree_diameter(grown) > max_diameter - 2) continue;
        auto code = tree_canonical_code(grown);
        if (found.emplace(code, grown).second) next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<std::pair<std::size_t, std::string>, Shape>> shapes;
  for (const auto& [code, adj] : found) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < static_cast<int>(adj.size()); ++a) {
      for (int b : adj[a]) {
        if (a < b) edges.emplace_back(a, b);
      }
    }
    Shape s = complete_hull(q, static_cast<int>(adj.size()), edges);
    shapes.push_back({{static_cast<std::size_t>(s.size()), code}, std::move(s)});
  }
  std::sort(shapes.begin(), shapes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& entry : shapes) out.push_back(std::move(entry.second));
  return out;
}

std::vector<Vertex> EmbeddedSubtree::image() const {
  std::vector<Vertex> out = placement;
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> EmbeddedSubtree::preimage(const Vertex& v) const {
  for (std::size_t i = 0; i < placement.size(); ++i) {
    if (placement[i] == v) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool EmbeddedSubtree::is_internal_image(const Vertex& v) const {
  auto i = preimage(v);
  return i && shape->is_internal(*i);
}

EmbeddedSubtree make_embedding(std::shared_ptr<const Shape> shape, std::vector<Vertex> placement) {
  if (static_cast<int>(placement.size()) != shape->size()) {
    throw Error(ErrorKind::InvalidArgument, "placement size does not match the shape");
  }
  TreeParams tree(shape->q());
  for (const auto& v : placement) check_vertex(tree, v);
  if (std::set<Vertex>(placement.begin(), placement.end()).size() != placement.size()) {
    throw Error(ErrorKind::InvalidArgument, "placement is not injective");
  }
  for (auto [a, b] : shape->edges()) {
    if (distance(placement[a], placement[b]) != 1) {
      throw Error(ErrorKind::InvalidArgument, "placement breaks edge " + shape->id(a) + "-" + shape->id(b));
    }
  }
  return {std::move(shape), std::move(placement)};
}

std::vector<EmbeddedSubtree> enumerate_embeddings(const Shape& s, const Vertex& anchor, int radius) {
  if (!validate_complete(s)) throw Error(ErrorKind::InvalidShape, "shape is not complete");
  const TreeParams tree(s.q());
  auto shared = std::make_shared<const Shape>(s);
  std::vector<EmbeddedSubtree> out;
  if (radius < 0) return out;

  if (s.size() == 1) {
    for (auto& v : ball(tree, anchor, radius)) out.push_back({shared, {v}});
    return out;
  }
  if (s.size() == 2) {
    for (auto& v : ball(tree, anchor, radius)) {
      if (v.is_root() || distance(v.parent(), anchor) > radius) continue;
      out.push_back({shared, {v.parent(), v}});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.image() < b.image(); });
    return out;
  }

  // Internal vertices in BFS order so every vertex after the first has a placed parent.
  const auto internal = s.internal_vertices();
  std::vector<int> order{internal.front()};
  std::vector<int> parent_of(static_cast<std::size_t>(s.size()), -1);
  std::vector<char> queued(static_cast<std::size_t>(s.size()), 0);
  queued[internal.front()] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int w : s.adjacent(order[i])) {
      if (s.is_internal(w) && !queued[w]) {
        queued[w] = 1;
        parent_of[w] = order[i];
        order.push_back(w);
      }
    }
  }

  const auto region = ball(tree, anchor, radius - 1);
  const std::set<Vertex> allowed(region.begin(), region.end());
  std::map<std::vector<Vertex>, std::vector<Vertex>> by_image;
  std::vector<Vertex> placed(static_cast<std::size_t>(s.size()));
  std::set<Vertex> used;

  auto finish = [&]() {
    std::vector<Vertex> full = placed;
    for (int v : internal) {
      std::vector<Vertex> free;
      for (auto& n : neighbors(tree, placed[v])) {
        if (!used.count(n)) free.push_back(n);
      }
      std::size_t k = 0;
      for (int w : s.adjacent(v)) {
        if (!s.is_internal(w)) full[w] = free.at(k++);
      }
    }
    auto key = full;
    std::sort(key.begin(), key.end());
    by_image.emplace(std::move(key), std::move(full));
  };

  auto place = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      finish();
      return;
    }
    const int v = order[idx];
    std::vector<Vertex> candidates;
    if (idx == 0) {
      candidates = region;
    } else {
      for (auto& n : neighbors(tree, placed[parent_of[v]])) {
        if (allowed.count(n) && !used.count(n)) candidates.push_back(std::move(n));
      }
    }
    for (auto& c : candidates) {
      if (used.count(c)) continue;
      placed[v] = c;
      used.insert(c);
      self(self, idx + 1);
      used.erase(c);
    }
  };
  place(place, 0);

  for (auto& [key, full] : by_image) out.push_back({shared, std::move(full)});
  return out;
}

bool hits(const EmbeddedSubtree& e, const RayPrefix& g0, const RayPrefix& g1, const RayPrefix& g2) {
  return e.is_internal_image(median(g0, g1, g2));
}

int count_hitting(const Shape& s, const RayPrefix& g0, const RayPrefix& g1, const RayPrefix& g2) {
  if (s.size() < 3) throw Error(ErrorKind::NotCuspidalShape, "vertex and edge shapes never hit");
  const Vertex m = median(g0, g1, g2);
  int count = 0;
  for (const auto& e : enumerate_embeddings(s, m, diameter(s) + 1)) {
    if (e.is_internal_image(m)) ++count;
  }
  return count;
}

}  // namespace arbocoh

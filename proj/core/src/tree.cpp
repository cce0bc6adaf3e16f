#include "arbocoh/tree.hpp"

#include <algorithm>
#include <sstream>

#include "arbocoh/error.hpp"

namespace arbocoh {

TreeParams::TreeParams(int branching) : q(branching) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be at least 2");
  if (q > 200) throw Error(ErrorKind::InvalidArgument, "q too large for label encoding");
}

Vertex::Vertex(std::initializer_list<int> labels) {
  word_.reserve(labels.size());
  for (int l : labels) {
    if (l < 0 || l > 255) throw Error(ErrorKind::InvalidArgument, "label out of range");
    word_.push_back(static_cast<Label>(l));
  }
}

Vertex Vertex::parent() const {
  if (word_.empty()) throw Error(ErrorKind::InvalidArgument, "the basepoint has no parent");
  return Vertex(std::vector<Label>(word_.begin(), word_.end() - 1));
}

Vertex Vertex::child(Label label) const {
  auto w = word_;
  w.push_back(label);
  return Vertex(std::move(w));
}

Vertex Vertex::prefix(int length) const {
  if (length < 0 || length > depth()) throw Error(ErrorKind::InvalidArgument, "bad prefix length");
  return Vertex(std::vector<Label>(word_.begin(), word_.begin() + length));
}

bool Vertex::is_prefix_of(const Vertex& other) const noexcept {
  return depth() <= other.depth() && std::equal(word_.begin(), word_.end(), other.word_.begin());
}

std::string Vertex::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out << ',';
    out << static_cast<int>(word_[i]);
  }
  out << ']';
  return out.str();
}

std::size_t VertexHash::operator()(const Vertex& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ v.word().size();
  for (Label l : v.word()) h = (h ^ l) * 0x100000001b3ULL;
  return h;
}

Vertex RayPrefix::at(int t) const { return end_.prefix(t); }

bool is_valid(const TreeParams& tree, const Vertex& v) noexcept {
  const auto& w = v.word();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= tree.labels_at(static_cast<int>(i))) return false;
  }
  return true;
}

void check_vertex(const TreeParams& tree, const Vertex& v) {
  if (!is_valid(tree, v)) {
    throw Error(ErrorKind::InvalidArgument, "vertex " + v.to_string() + " has a label out of range");
  }
}

int lcp_length(const Vertex& a, const Vertex& b) noexcept {
  const auto& x = a.word();
  const auto& y = b.word();
  const std::size_t n = std::min(x.size(), y.size());
  std::size_t i = 0;
  while (i < n && x[i] == y[i]) ++i;
  return static_cast<int>(i);
}

Vertex lcp(const Vertex& a, const Vertex& b) { return a.prefix(lcp_length(a, b)); }

int distance(const Vertex& u, const Vertex& v) noexcept {
  return u.depth() + v.depth() - 2 * lcp_length(u, v);
}

namespace {

// Common-prefix length between a ray and a vertex, certified to be the value
// for every boundary point of the cylinder.
int exact_lcp(const RayPrefix& g, const Vertex& x) {
  const int l = lcp_length(g.end(), x);
  if (l == g.depth()) {
    throw Error(ErrorKind::InsufficientDepth,
                "ray prefix " + g.end().to_string() + " does not pass vertex " + x.to_string());
  }
  return l;
}

int exact_lcp(const RayPrefix& g, const RayPrefix& h) {
  const int l = lcp_length(g.end(), h.end());
  if (l == g.depth() && l == h.depth()) {
    throw Error(ErrorKind::NotDistinct, "identical ray prefixes " + g.end().to_string());
  }
  if (l == g.depth() || l == h.depth()) {
    throw Error(ErrorKind::InsufficientDepth, "ray prefixes do not separate");
  }
  return l;
}

}  // namespace

int gromov_product(const Vertex& a, const Vertex& b, const Vertex& base) noexcept {
  return (distance(a, base) + distance(b, base) - distance(a, b)) / 2;
}

// With l_ab the certified common-prefix lengths, for a ray g and vertex x:
//   (g, x)_c = (|c| - |x| + d(x, c)) / 2 + l_gx - l_gc
int gromov_product(const RayPrefix& a, const Vertex& b, const Vertex& base) {
  const int l_ab = exact_lcp(a, b);
  const int l_ac = exact_lcp(a, base);
  return (base.depth() - b.depth() + distance(b, base)) / 2 + l_ab - l_ac;
}

int gromov_product(const Vertex& a, const RayPrefix& b, const Vertex& base) {
  return gromov_product(b, a, base);
}

// (g, h)_c = |c| - l_gc - l_hc + l_gh
int gromov_product(const RayPrefix& a, const RayPrefix& b, const Vertex& base) {
  const int l_ab = exact_lcp(a, b);
  return base.depth() - exact_lcp(a, base) - exact_lcp(b, base) + l_ab;
}

namespace {

Vertex deepest(Vertex a, Vertex b, Vertex c) {
  if (b.depth() > a.depth()) a = std::move(b);
  if (c.depth() > a.depth()) a = std::move(c);
  return a;
}

}  // namespace

Vertex median(const RayPrefix& g0, const RayPrefix& g1, const RayPrefix& g2) {
  const int l01 = exact_lcp(g0, g1);
  const int l02 = exact_lcp(g0, g2);
  const int l12 = exact_lcp(g1, g2);
  return deepest(g0.at(l01), g0.at(l02), g1.at(l12));
}

Vertex median(const Vertex& a, const Vertex& b, const Vertex& c) {
  return deepest(lcp(a, b), lcp(a, c), lcp(b, c));
}

Vertex median(const Vertex& a, const RayPrefix& g1, const RayPrefix& g2) {
  const int la1 = exact_lcp(g1, a);
  const int la2 = exact_lcp(g2, a);
  const int l12 = exact_lcp(g1, g2);
  return deepest(a.prefix(la1), a.prefix(la2), g1.at(l12));
}

// The merge point of [x, g) with the root ray sits at depth l_gx, so
//   d(x, c) = |x| + |c| - 2 l_gx   for any c deep on g.
int busemann(const RayPrefix& g, const Vertex& x, const Vertex& y) {
  const int lx = exact_lcp(g, x);
  const int ly = exact_lcp(g, y);
  return (x.depth() - 2 * lx) - (y.depth() - 2 * ly);
}

Rational rational_power(int q, int k) {
  boost::multiprecision::cpp_int p = 1;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) p *= q;
  return k >= 0 ? Rational(p) : Rational(1) / Rational(p);
}

Rational poisson_kernel(const TreeParams& tree, const Vertex& x, const Vertex& y, const RayPrefix& g) {
  return rational_power(tree.q, busemann(g, x, y));
}

Rational cylinder_measure(const TreeParams& tree, const Vertex& x, const Vertex& w) {
  const int d = distance(x, w);
  if (d == 0) throw Error(ErrorKind::DegenerateCylinder, "U(x, x) has no direction");
  return Rational(1, tree.q + 1) * rational_power(tree.q, -(d - 1));
}

Rational half_tree_measure(const TreeParams& tree, const Vertex& x, const Vertex& w) {
  if (w.is_root()) return Rational(1);
  if (!w.is_prefix_of(x)) return cylinder_measure(tree, x, w);
  // x sits inside the half-tree: take the complement of the opposite half-tree,
  // which is U(x, parent(w)).
  return Rational(1) - cylinder_measure(tree, x, w.parent());
}

Rational root_cylinder_mass(const TreeParams& tree, const Vertex& w) {
  if (w.is_root()) return Rational(1);
  return cylinder_measure(tree, Vertex{}, w);
}

std::vector<Vertex> neighbors(const TreeParams& tree, const Vertex& v) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(tree.degree()));
  if (!v.is_root()) out.push_back(v.parent());
  const int n = tree.labels_at(v.depth());
  for (int c = 0; c < n; ++c) out.push_back(v.child(static_cast<Label>(c)));
  return out;
}

std::vector<Vertex> ball(const TreeParams& tree, const Vertex& center, int radius) {
  std::vector<Vertex> out{center};
  std::vector<std::pair<Vertex, Vertex>> frontier{{center, center}};
  for (int r = 0; r < radius; ++r) {
    std::vector<std::pair<Vertex, Vertex>> next;
    for (const auto& [v, from] : frontier) {
      for (auto& n : neighbors(tree, v)) {
        if (r > 0 && n == from) continue;
        out.push_back(n);
        next.emplace_back(std::move(n), v);
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_at_depth(const TreeParams& tree, int depth) {
  if (depth == 0) return 1;
  std::size_t n = static_cast<std::size_t>(tree.q + 1);
  for (int i = 1; i < depth; ++i) n *= static_cast<std::size_t>(tree.q);
  return n;
}

std::vector<Vertex> vertices_at_depth(const TreeParams& tree, int depth) {
  std::vector<Vertex> level{Vertex{}};
  for (int d = 0; d < depth; ++d) {
    std::vector<Vertex> next;
    next.reserve(level.size() * static_cast<std::size_t>(tree.labels_at(d)));
    for (const auto& v : level) {
      for (int c = 0; c < tree.labels_at(d); ++c) next.push_back(v.child(static_cast<Label>(c)));
    }
    level = std::move(next);
  }
  return level;
}

std::size_t index_at_depth(const TreeParams& tree, const Vertex& v) {
  std::size_t idx = 0;
  const auto& w = v.word();
  for (std::size_t i = 0; i < w.size(); ++i) {
    idx = idx * static_cast<std::size_t>(tree.labels_at(static_cast<int>(i))) + w[i];
  }
  return idx;
}

std::vector<Vertex> geodesic(const Vertex& u, const Vertex& v) {
  const int l = lcp_length(u, v);
  std::vector<Vertex> path;
  for (int d = u.depth(); d >= l; --d) path.push_back(u.prefix(d));
  for (int d = l + 1; d <= v.depth(); ++d) path.push_back(v.prefix(d));
  return path;
}

}  // namespace arbocoh

#pragma once

// Geometry and boundary measures of the (q+1)-regular tree.
//
// Vertices are root-based label words: the empty word is the basepoint o, the
// first label ranges over {0..q} and every later label over {0..q-1}. A word
// is then also the geodesic from o, so depth(v) = d(o, v) and most metric
// quantities reduce to longest-common-prefix arithmetic.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace arbocoh {

using Rational = boost::multiprecision::cpp_rational;
using Label = std::uint8_t;

struct TreeParams {
  int q = 2;

  TreeParams() = default;
  explicit TreeParams(int branching);

  int degree() const noexcept { return q + 1; }
  /// Number of labels allowed at position `index` of a word.
  int labels_at(int index) const noexcept { return index == 0 ? q + 1 : q; }
};

class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<Label> word) : word_(std::move(word)) {}
  Vertex(std::initializer_list<int> labels);

  const std::vector<Label>& word() const noexcept { return word_; }
  int depth() const noexcept { return static_cast<int>(word_.size()); }
  bool is_root() const noexcept { return word_.empty(); }

  Vertex parent() const;
  Vertex child(Label label) const;
  Vertex prefix(int length) const;
  bool is_prefix_of(const Vertex& other) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<Label> word_;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept;
};

/// Finite prefix of the root-based ray towards a boundary point; stands for the
/// cylinder U(o, end) of all boundary points through `end`.
class RayPrefix {
 public:
  RayPrefix() = default;
  explicit RayPrefix(Vertex end) : end_(std::move(end)) {}
  RayPrefix(std::initializer_list<int> labels) : end_(labels) {}

  const Vertex& end() const noexcept { return end_; }
  const std::vector<Label>& word() const noexcept { return end_.word(); }
  int depth() const noexcept { return end_.depth(); }
  /// The vertex at distance t from o along the ray.
  Vertex at(int t) const;

  friend bool operator==(const RayPrefix&, const RayPrefix&) = default;

 private:
  Vertex end_;
};

bool is_valid(const TreeParams& tree, const Vertex& v) noexcept;
void check_vertex(const TreeParams& tree, const Vertex& v);

int lcp_length(const Vertex& a, const Vertex& b) noexcept;
Vertex lcp(const Vertex& a, const Vertex& b);

int distance(const Vertex& u, const Vertex& v) noexcept;

// Gromov products. Ray arguments throw InsufficientDepth when the prefix does
// not determine the value; equal rays (value +infinity) are the caller's job.
int gromov_product(const Vertex& a, const Vertex& b, const Vertex& base) noexcept;
int gromov_product(const RayPrefix& a, const Vertex& b, const Vertex& base);
int gromov_product(const Vertex& a, const RayPrefix& b, const Vertex& base);
int gromov_product(const RayPrefix& a, const RayPrefix& b, const Vertex& base);

/// Median of three pairwise distinct rays. Throws NotDistinct / InsufficientDepth.
Vertex median(const RayPrefix& g0, const RayPrefix& g1, const RayPrefix& g2);
/// Median of three vertices (the deepest pairwise common ancestor).
Vertex median(const Vertex& a, const Vertex& b, const Vertex& c);
/// Median of a vertex and two distinct rays.
Vertex median(const Vertex& a, const RayPrefix& g1, const RayPrefix& g2);

/// B_g(x, y) = d(x, c) - d(y, c) with c the merge point of [x, g) and [y, g).
int busemann(const RayPrefix& g, const Vertex& x, const Vertex& y);

/// q^k as an exact rational, k of either sign.
Rational rational_power(int q, int k);

/// P(x, y, g) = q^{B_g(x, y)}.
Rational poisson_kernel(const TreeParams& tree, const Vertex& x, const Vertex& y,
                        const RayPrefix& g);

/// mu_x(U(x, w)) = 1/(q+1) * (1/q)^{d(x,w)-1}. Throws DegenerateCylinder for w == x.
Rational cylinder_measure(const TreeParams& tree, const Vertex& x, const Vertex& w);

/// mu_x(U(o, w)): the visual measure from x of the half-tree hanging below the
/// edge (parent(w), w). For w == o this is the whole boundary.
Rational half_tree_measure(const TreeParams& tree, const Vertex& x, const Vertex& w);

/// mu_o(U(o, w)), with the convention mu_o(U(o, o)) = 1.
Rational root_cylinder_mass(const TreeParams& tree, const Vertex& w);

/// Neighbours of v in increasing word order (parent first, then children).
std::vector<Vertex> neighbors(const TreeParams& tree, const Vertex& v);

/// All vertices within `radius` of `center`, sorted by word.
std::vector<Vertex> ball(const TreeParams& tree, const Vertex& center, int radius);

/// All words of length `depth` in lexicographic order; index_at_depth inverts it.
std::vector<Vertex> vertices_at_depth(const TreeParams& tree, int depth);
std::size_t count_at_depth(const TreeParams& tree, int depth);
std::size_t index_at_depth(const TreeParams& tree, const Vertex& v);

/// Vertices on the geodesic from u to v, u first.
std::vector<Vertex> geodesic(const Vertex& u, const Vertex& v);

}  // namespace arbocoh

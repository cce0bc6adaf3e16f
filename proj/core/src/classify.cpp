#include "arbocoh/classify.hpp"

#include <algorithm>
#include <cmath>

#include "arbocoh/error.hpp"
#include "arbocoh/spherical.hpp"

namespace arbocoh {

namespace {

bool contains(const VertexSet& set, int v) { return std::binary_search(set.begin(), set.end(), v); }

void check_table_matches(const Shape& s, const CharacterTable& t, std::size_t row) {
  if (t.group.degree() != s.size()) throw Error(ErrorKind::InvalidArgument, "table does not act on the shape");
  if (row >= t.rows()) throw Error(ErrorKind::InvalidArgument, "character row out of range");
}

std::vector<int> sorted_pair(int x, int y) { return {std::min(x, y), std::max(x, y)}; }

}  // namespace

std::vector<std::pair<int, int>> admissible_pairs(const Shape& s) {
  const auto maximal = maximal_proper_complete_subtrees(s);
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < s.size(); ++x) {
    if (s.degree(x) != 1) continue;
    for (int y = 0; y < s.size(); ++y) {
      if (y == x || s.degree(y) != 1) continue;
      bool ok = false;
      for (std::size_t a = 0; a < maximal.size() && !ok; ++a) {
        if (contains(maximal[a], x)) continue;
        for (std::size_t b = 0; b < maximal.size() && !ok; ++b) ok = b != a && !contains(maximal[b], y);
      }
      if (ok) out.emplace_back(x, y);
    }
  }
  return out;
}

bool is_nondegenerate(const Shape& s, const CharacterTable& t, std::size_t row) {
  check_table_matches(s, t, row);
  for (const auto& sj : maximal_proper_complete_subtrees(s)) {
    if (invariant_dim(t, row, pointwise_stabilizer(t.group, sj)) != 0) return false;
  }
  return true;
}

int h2_dimension(const Shape& s, const CharacterTable& t, std::size_t row, int x, int y) {
  check_table_matches(s, t, row);
  if (classify_shape(s).tag != ShapeClass::Tag::Centipede) throw Error(ErrorKind::NotACentipede, "shape is not a centipede");
  if (!is_nondegenerate(s, t, row)) throw Error(ErrorKind::DegenerateIrrep, "row has A_j-invariant vectors");
  const auto pairs = admissible_pairs(s);
  if (std::find(pairs.begin(), pairs.end(), std::make_pair(x, y)) == pairs.end()) {
    throw Error(ErrorKind::BadVertexChoice, "x and y must be leaves outside two different maximal subtrees");
  }
  const auto pts = sorted_pair(x, y);
  return invariant_dim(t, row, pointwise_stabilizer(t.group, pts)) -
         invariant_dim(t, row, setwise_stabilizer(t.group, pts));
}

std::vector<NondegenerateEntry> enumerate_nondegenerate(const Shape& s, const CharacterTableOptions& options) {
  if (diameter(s) < 2) throw Error(ErrorKind::TooSmall, "diameter must be at least 2");
  if (!validate_complete(s)) throw Error(ErrorKind::InvalidShape, "shape is not complete");
  const CharacterTable t = character_table(shape_automorphism_group(s), options);
  const bool centipede = classify_shape(s).tag == ShapeClass::Tag::Centipede;
  std::pair<int, int> xy{-1, -1};
  if (centipede) xy = admissible_pairs(s).front();

  std::vector<NondegenerateEntry> out;
  for (std::size_t row = 0; row < t.rows(); ++row) {
    if (!is_nondegenerate(s, t, row)) continue;
    out.push_back({row, t.degrees[row], centipede ? h2_dimension(s, t, row, xy.first, xy.second) : 0});
  }
  return out;
}

std::size_t sign_kernel_st_row(const Shape& s, const CharacterTable& t) {
  const ShapeClass cls = classify_shape(s);
  if (s.q() != 2 || cls.tag != ShapeClass::Tag::Centipede || cls.k < 3) {
    throw Error(ErrorKind::NotACentipede, "needs a q = 2 centipede of length at least 3");
  }
  check_table_matches(s, t, 0);
  const auto [x, y] = admissible_pairs(s).front();
  const auto pts = sorted_pair(x, y);
  const PermGroup q = pointwise_stabilizer(t.group, pts);
  const PermGroup qt = setwise_stabilizer(t.group, pts);
  Permutation sigma;
  for (const auto& p : qt.elements()) {
    if (!q.contains(p)) sigma = p;
  }
  const int hub = s.adjacent(x).front();
  Permutation tau = identity_permutation(s.size());
  for (int u : s.adjacent(hub)) {
    if (u != x && s.degree(u) == 1) std::swap(tau[x], tau[u]);
  }
  for (std::size_t row = 0; row < t.rows(); ++row) {
    if (t.degrees[row] == 1 && std::abs(t.value(row, sigma) + 1.0) < 1e-9 && std::abs(t.value(row, tau) + 1.0) < 1e-9) {
      return row;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "no degree-1 row with chi(s) = chi(t) = -1");
}

RepDescriptor RepDescriptor::spherical(int q, std::complex<double> z) {
  RepDescriptor d;
  d.kind = Kind::Spherical;
  d.q = q;
  d.z = z;
  return d;
}

RepDescriptor RepDescriptor::special(int q, int sign) {
  RepDescriptor d;
  d.kind = Kind::Special;
  d.q = q;
  d.sign = sign;
  return d;
}

RepDescriptor RepDescriptor::cuspidal(std::shared_ptr<const Shape> shape, std::size_t row) {
  RepDescriptor d;
  d.kind = Kind::Cuspidal;
  d.q = shape ? shape->q() : 0;
  d.shape = std::move(shape);
  d.row = row;
  return d;
}

int classify_bounded_cohomology(const RepDescriptor& d, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidDescriptor, "degree n must be at least 1");
  if (d.q < 2) throw Error(ErrorKind::InvalidDescriptor, "q must be at least 2");
  switch (d.kind) {
    case RepDescriptor::Kind::Spherical:
      if (!is_admissible(d.q, d.z)) throw Error(ErrorKind::InvalidDescriptor, "z is not admissible");
      return 0;
    case RepDescriptor::Kind::Special:
      if (d.sign != 1 && d.sign != -1) throw Error(ErrorKind::InvalidDescriptor, "sign must be +1 or -1");
      return 0;
    case RepDescriptor::Kind::Cuspidal:
      break;
  }
  if (!d.shape) throw Error(ErrorKind::InvalidDescriptor, "cuspidal descriptor without a shape");
  const Shape& s = *d.shape;
  try {
    if (!validate_complete(s)) throw Error(ErrorKind::InvalidDescriptor, "shape is not complete");
    if (diameter(s) < 2) throw Error(ErrorKind::InvalidDescriptor, "cuspidal shapes have diameter at least 2");
    const CharacterTable t = character_table(shape_automorphism_group(s));
    if (d.row >= t.rows()) throw Error(ErrorKind::InvalidDescriptor, "character row out of range");
    if (!is_nondegenerate(s, t, d.row)) throw Error(ErrorKind::InvalidDescriptor, "row is degenerate");
    if (n != 2 || classify_shape(s).tag != ShapeClass::Tag::Centipede) return 0;
    const auto [x, y] = admissible_pairs(s).front();
    return h2_dimension(s, t, d.row, x, y);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidDescriptor || e.kind() == ErrorKind::GroupTooLarge ||
        e.kind() == ErrorKind::NumericalDegeneracy) {
      throw;
    }
    throw Error(ErrorKind::InvalidDescriptor, e.what());
  }
}

}  // namespace arbocoh

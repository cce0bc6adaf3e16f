#include <memory>

#include <gtest/gtest.h>

#include "arbocoh/classify.hpp"
#include "test_util.hpp"

namespace arbocoh {
namespace {

std::size_t row_with_fingerprint(const CharacterTable& t, const std::string& fp) {
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (character_fingerprint(t, r) == fp) return r;
  }
  ADD_FAILURE() << "no row " << fp;
  return 0;
}

// The generators of the dihedral presentation for a q = 2 centipede: s is the
// non-trivial element of the setwise stabilizer of the canonical pair and t swaps
// x with the other leaf at its end.
struct CentipedeGenerators {
  Permutation s, t;
};

CentipedeGenerators centipede_generators(const Shape& shape, const PermGroup& g) {
  const auto [x, y] = admissible_pairs(shape).front();
  CentipedeGenerators out;
  const PermGroup setwise = setwise_stabilizer(g, {x, y});
  for (const auto& p : setwise.elements()) {
    if (!is_identity(p)) out.s = p;
  }
  for (const auto& p : g.elements()) {
    int moved = 0;
    for (int v = 0; v < shape.size(); ++v) moved += p[v] != v;
    if (moved == 2 && p[x] != x) out.t = p;
  }
  return out;
}

std::size_t linear_row(const CharacterTable& t, const CentipedeGenerators& gen, int chi_s, int chi_t) {
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.degrees[r] != 1) continue;
    if (std::abs(t.value(r, gen.s).real() - chi_s) < 1e-9 && std::abs(t.value(r, gen.t).real() - chi_t) < 1e-9) {
      return r;
    }
  }
  ADD_FAILURE() << "no linear row";
  return 0;
}

TEST(AdmissiblePairs, StarAndCentipede) {
  const auto star = admissible_pairs(star_shape(2));
  EXPECT_EQ(star.size(), 6u);  // ordered pairs of distinct leaves
  for (auto [x, y] : star) EXPECT_NE(x, y);

  const Shape c4 = centipede_shape(2, 4);
  const auto pairs = admissible_pairs(c4);
  ASSERT_FALSE(pairs.empty());
  EXPECT_TRUE(std::is_sorted(pairs.begin(), pairs.end()));
  for (auto [x, y] : pairs) {
    EXPECT_EQ(c4.degree(x), 1);
    EXPECT_EQ(c4.degree(y), 1);
  }
  // Two end leaves on each side; x and y must sit at opposite ends.
  EXPECT_EQ(pairs.size(), 8u);
}

TEST(IsNondegenerate, Star) {
  const Shape s = star_shape(2);
  const auto t = character_table(shape_automorphism_group(s));
  EXPECT_FALSE(is_nondegenerate(s, t, 0));
  EXPECT_TRUE(is_nondegenerate(s, t, 1));
  EXPECT_FALSE(is_nondegenerate(s, t, 2));
  EXPECT_ERROR_KIND(is_nondegenerate(edge_shape(2), character_table(shape_automorphism_group(edge_shape(2))), 0),
                    ErrorKind::TooSmall);
}

TEST(H2Dimension, CentipedeExample) {
  const Shape c4 = centipede_shape(2, 4);
  const auto t = character_table(shape_automorphism_group(c4));
  const auto gen = centipede_generators(c4, t.group);
  const auto [x, y] = admissible_pairs(c4).front();

  const std::size_t kernel_st = linear_row(t, gen, -1, -1);
  EXPECT_EQ(sign_kernel_st_row(c4, t), kernel_st);
  EXPECT_EQ(h2_dimension(c4, t, kernel_st, x, y), 1);

  const std::size_t other = linear_row(t, gen, 1, -1);
  EXPECT_TRUE(is_nondegenerate(c4, t, other));
  EXPECT_EQ(h2_dimension(c4, t, other, x, y), 0);
}

TEST(H2Dimension, StarSign) {
  const Shape s = star_shape(2);
  const auto t = character_table(shape_automorphism_group(s));
  const auto [x, y] = admissible_pairs(s).front();
  EXPECT_EQ(h2_dimension(s, t, 1, x, y), 1);
}

TEST(H2Dimension, Errors) {
  const Shape y = y_shape(2);
  const auto ty = character_table(shape_automorphism_group(y));
  EXPECT_ERROR_KIND(h2_dimension(y, ty, 0, 0, 1), ErrorKind::NotACentipede);

  const Shape c4 = centipede_shape(2, 4);
  const auto t = character_table(shape_automorphism_group(c4));
  const auto [x, yy] = admissible_pairs(c4).front();
  EXPECT_ERROR_KIND(h2_dimension(c4, t, 0, x, yy), ErrorKind::DegenerateIrrep);
  const std::size_t row = sign_kernel_st_row(c4, t);
  EXPECT_ERROR_KIND(h2_dimension(c4, t, row, x, x), ErrorKind::BadVertexChoice);
  EXPECT_ERROR_KIND(h2_dimension(c4, t, row, 0, yy), ErrorKind::BadVertexChoice);  // internal vertex
}

TEST(H2Dimension, IndependentOfAdmissiblePair) {
  for (int q : {2, 3}) {
    for (const auto& s : {star_shape(q), centipede_shape(q, 3), centipede_shape(q, 4)}) {
      const auto t = character_table(shape_automorphism_group(s));
      for (std::size_t r = 0; r < t.rows(); ++r) {
        if (!is_nondegenerate(s, t, r)) continue;
        const auto pairs = admissible_pairs(s);
        const int first = h2_dimension(s, t, r, pairs.front().first, pairs.front().second);
        EXPECT_GE(first, 0);
        for (auto [x, y] : pairs) EXPECT_EQ(h2_dimension(s, t, r, x, y), first) << q << " " << s.size() << " " << r;
      }
    }
  }
}

TEST(EnumerateNondegenerate, Examples) {
  const auto star = enumerate_nondegenerate(star_shape(2));
  ASSERT_EQ(star.size(), 1u);
  EXPECT_EQ(star[0].row, 1u);
  EXPECT_EQ(star[0].degree, 1);
  EXPECT_EQ(star[0].h2, 1);

  const auto c4 = enumerate_nondegenerate(centipede_shape(2, 4));
  ASSERT_EQ(c4.size(), 2u);
  EXPECT_EQ(std::min(c4[0].h2, c4[1].h2), 0);
  EXPECT_EQ(std::max(c4[0].h2, c4[1].h2), 1);

  const auto y = enumerate_nondegenerate(y_shape(2));
  EXPECT_FALSE(y.empty());
  for (const auto& e : y) EXPECT_EQ(e.h2, 0);
  EXPECT_ERROR_KIND(enumerate_nondegenerate(edge_shape(2)), ErrorKind::TooSmall);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_bounded_cohomology(RepDescriptor::spherical(2, {0.5, 0}), 2), 0);
  for (int sign : {1, -1}) EXPECT_EQ(classify_bounded_cohomology(RepDescriptor::special(3, sign), 2), 0);

  const auto y = std::make_shared<const Shape>(y_shape(2));
  for (const auto& e : enumerate_nondegenerate(*y)) {
    EXPECT_EQ(classify_bounded_cohomology(RepDescriptor::cuspidal(y, e.row), 2), 0);
  }

  const auto c4 = std::make_shared<const Shape>(centipede_shape(2, 4));
  const auto t = character_table(shape_automorphism_group(*c4));
  const auto d = RepDescriptor::cuspidal(c4, sign_kernel_st_row(*c4, t));
  EXPECT_EQ(classify_bounded_cohomology(d, 2), 1);
  for (int n : {1, 3, 4, 5}) EXPECT_EQ(classify_bounded_cohomology(d, n), 0);
}

TEST(Classify, DegreeOneVanishes) {
  for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    EXPECT_EQ(classify_bounded_cohomology(RepDescriptor::spherical(2, {x, 0}), 1), 0);
  }
  EXPECT_EQ(classify_bounded_cohomology(RepDescriptor::spherical(3, {0.5, 1.7}), 1), 0);
  for (int q : {2, 3}) {
    for (const auto& s : enumerate_complete_shapes(q, q == 2 ? 4 : 3)) {
      if (diameter(s) < 2) continue;
      const auto shape = std::make_shared<const Shape>(s);
      for (const auto& e : enumerate_nondegenerate(s)) {
        EXPECT_EQ(classify_bounded_cohomology(RepDescriptor::cuspidal(shape, e.row), 1), 0);
      }
    }
  }
}

TEST(Classify, InvalidDescriptors) {
  EXPECT_ERROR_KIND(classify_bounded_cohomology(RepDescriptor::spherical(2, {2.0, 0}), 2), ErrorKind::InvalidDescriptor);
  EXPECT_ERROR_KIND(classify_bounded_cohomology(RepDescriptor::special(2, 0), 2), ErrorKind::InvalidDescriptor);
  EXPECT_ERROR_KIND(classify_bounded_cohomology(RepDescriptor::special(2, 1), 0), ErrorKind::InvalidDescriptor);
  const auto star = std::make_shared<const Shape>(star_shape(2));
  EXPECT_ERROR_KIND(classify_bounded_cohomology(RepDescriptor::cuspidal(star, 0), 2), ErrorKind::InvalidDescriptor);
  EXPECT_ERROR_KIND(classify_bounded_cohomology(RepDescriptor::cuspidal(star, 7), 2), ErrorKind::InvalidDescriptor);
  const auto edge = std::make_shared<const Shape>(edge_shape(2));
  EXPECT_ERROR_KIND(classify_bounded_cohomology(RepDescriptor::cuspidal(edge, 0), 2), ErrorKind::InvalidDescriptor);
  EXPECT_ERROR_KIND(classify_bounded_cohomology(RepDescriptor::cuspidal(nullptr, 0), 2), ErrorKind::InvalidDescriptor);
}

}  // namespace
}  // namespace arbocoh

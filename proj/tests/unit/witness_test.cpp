#include <random>

#include <gtest/gtest.h>

#include "arbocoh/classify.hpp"
#include "arbocoh/sampling.hpp"
#include "arbocoh/witness.hpp"
#include "test_util.hpp"

namespace arbocoh {
namespace {

struct Setup {
  WitnessContext ctx;
  IrrepModel model;
  Eigen::VectorXcd v;
};

// First shape row with a non-zero degree-2 contribution.
Setup make_setup(const Shape& s, int ray_depth) {
  Setup out;
  out.ctx = make_witness_context(std::make_shared<const Shape>(s), ray_depth);
  const auto t = character_table(out.ctx.aut);
  for (const auto& e : enumerate_nondegenerate(s)) {
    if (e.h2 > 0) {
      out.model = realize_irrep(t, e.row);
      break;
    }
  }
  out.v = witness_vector(out.ctx, out.model);
  return out;
}

bool near(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) { return (a - b).norm() < 1e-9; }

TEST(WitnessContext, ReferenceIsItsOwnSection) {
  for (const auto& s : {star_shape(2), centipede_shape(2, 4), centipede_shape(3, 3)}) {
    const auto ctx = make_witness_context(std::make_shared<const Shape>(s), 10);
    EXPECT_TRUE(is_identity(section_relabel(ctx, ctx.reference)));
    EXPECT_EQ(ctx.q_setwise.order(), 2 * ctx.q_pointwise.order());
    EXPECT_TRUE(ctx.q_setwise.contains(ctx.swap));
    EXPECT_FALSE(ctx.q_pointwise.contains(ctx.swap));
  }
  EXPECT_ERROR_KIND(make_witness_context(std::make_shared<const Shape>(y_shape(2)), 10), ErrorKind::NotACentipede);
  EXPECT_ERROR_KIND(make_witness_context(std::make_shared<const Shape>(centipede_shape(2, 4)), 3),
                    ErrorKind::InvalidArgument);
}

TEST(WitnessVector, RejectsWhenInvariantsCoincide) {
  const Shape s = centipede_shape(2, 4);
  const auto ctx = make_witness_context(std::make_shared<const Shape>(s), 10);
  const auto t = character_table(ctx.aut);
  for (const auto& e : enumerate_nondegenerate(s)) {
    const auto m = realize_irrep(t, e.row);
    if (e.h2 == 0) {
      EXPECT_ERROR_KIND(witness_vector(ctx, m), ErrorKind::BadVector);
    } else {
      const auto v = witness_vector(ctx, m);
      EXPECT_NEAR(v.norm(), 1.0, 1e-12);
      EXPECT_TRUE(near(m(ctx.swap) * v, -v));
    }
  }
}

TEST(WitnessCochain, ReferenceAndSwap) {
  for (const auto& s : {star_shape(2), centipede_shape(2, 3), centipede_shape(2, 4), centipede_shape(3, 3)}) {
    const auto w = make_setup(s, 12);
    const auto& c = w.ctx;
    const auto a = witness_cochain(c, w.model, w.v, c.gamma0, c.gamma1, c.reference, 12);
    ASSERT_TRUE(a.has_value());
    EXPECT_TRUE(near(*a, w.v));
    const auto b = witness_cochain(c, w.model, w.v, c.gamma1, c.gamma0, c.reference, 12);
    ASSERT_TRUE(b.has_value());
    EXPECT_TRUE(near(*b, -w.v));
  }
}

TEST(WitnessCochain, ZeroOffTheGeodesic) {
  const auto w = make_setup(centipede_shape(2, 3), 12);
  const auto far = enumerate_embeddings(*w.ctx.shape, Vertex{2, 1, 1, 1}, 2);
  ASSERT_FALSE(far.empty());
  for (const auto& e : far) {
    EXPECT_FALSE(witness_cochain(w.ctx, w.model, w.v, w.ctx.gamma0, w.ctx.gamma1, e, 12).has_value());
  }
}

TEST(WitnessCochain, Errors) {
  const auto w = make_setup(centipede_shape(2, 3), 12);
  const auto& c = w.ctx;
  EXPECT_ERROR_KIND(witness_cochain(c, w.model, w.v, c.gamma0, c.gamma0, c.reference, 12), ErrorKind::NotDistinct);
  Eigen::VectorXcd bad = Eigen::VectorXcd::Ones(w.v.size());
  if (!(w.model(c.swap) * bad + bad).isZero(1e-9)) {
    EXPECT_ERROR_KIND(witness_cochain(c, w.model, bad, c.gamma0, c.gamma1, c.reference, 12), ErrorKind::BadVector);
  }
  EXPECT_ERROR_KIND(witness_cochain(c, w.model, w.v, c.gamma0, c.gamma1, c.reference, 1), ErrorKind::InsufficientDepth);
}

TEST(WitnessCochain, EquivariantAndAlternating) {
  std::mt19937_64 rng(41);
  const int depth = 14;
  int nonzero = 0;
  for (const auto& s : {centipede_shape(2, 3), centipede_shape(2, 4), centipede_shape(3, 3)}) {
    const auto w = make_setup(s, depth);
    const TreeParams& t = w.ctx.tree;
    for (int n = 0; n < 40; ++n) {
      const auto r = random_distinct_rays(t, 2, depth, 2, rng);
      const Vertex anchor = lcp(r[0].end(), r[1].end());
      const auto embs = enumerate_embeddings(s, anchor, diameter(s));
      const auto& e = embs[std::uniform_int_distribution<std::size_t>(0, embs.size() - 1)(rng)];

      const auto a = witness_cochain(w.ctx, w.model, w.v, r[0], r[1], e, depth);
      const auto swapped = witness_cochain(w.ctx, w.model, w.v, r[1], r[0], e, depth);
      ASSERT_EQ(a.has_value(), swapped.has_value());
      if (a) EXPECT_TRUE(near(*swapped, -*a));
      nonzero += a.has_value();

      std::vector<Vertex> targets = e.placement;
      targets.push_back(r[0].end());
      targets.push_back(r[1].end());
      const auto f = extend_to_cover(random_isometry(t, 2, 1, rng), targets, &rng);
      std::vector<Vertex> moved;
      for (const auto& u : e.placement) moved.push_back(f.apply(u));
      const auto fe = make_embedding(e.shape, moved);
      const auto b = witness_cochain(w.ctx, w.model, w.v, f.apply(r[0]), f.apply(r[1]), fe, depth);
      ASSERT_EQ(a.has_value(), b.has_value());
      if (a) EXPECT_TRUE(near(*b, w.model(induced_automorphism(w.ctx, f, e)) * *a));
    }
  }
  EXPECT_GT(nonzero, 10);
}

TEST(WitnessCoboundary, SupportedOnHittingEmbeddings) {
  std::mt19937_64 rng(43);
  const int depth = 14;
  for (const auto& s : {centipede_shape(2, 3), centipede_shape(2, 4)}) {
    const auto w = make_setup(s, depth);
    int nonzero = 0;
    for (int n = 0; n < 10; ++n) {
      const auto r = random_distinct_rays(w.ctx.tree, 3, depth, 3, rng);
      const Vertex m = median(r[0], r[1], r[2]);
      for (const auto& e : enumerate_embeddings(s, m, diameter(s) + 2)) {
        const auto d = witness_coboundary(w.ctx, w.model, w.v, r[0], r[1], r[2], e, depth);
        if (d.norm() > 1e-9) {
          ++nonzero;
          EXPECT_TRUE(hits(e, r[0], r[1], r[2]));
        }
      }
    }
    EXPECT_GT(nonzero, 0);
  }
}

}  // namespace
}  // namespace arbocoh

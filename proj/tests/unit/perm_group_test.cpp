#include <functional>
#include <map>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "arbocoh/perm_group.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace arbocoh {
namespace {

std::set<Permutation> as_set(const PermGroup& g) { return {g.elements().begin(), g.elements().end()}; }

PermGroup sym3() { return closure(3, {{1, 0, 2}, {1, 2, 0}}); }

Permutation power(const Permutation& p, int k) {
  Permutation r = identity_permutation(static_cast<int>(p.size()));
  for (int i = 0; i < k; ++i) r = compose(p, r);
  return r;
}

TEST(Closure, Examples) {
  EXPECT_EQ(closure(3, {}).order(), 1u);
  EXPECT_EQ(closure(2, {{1, 0}}).order(), 2u);
  const PermGroup s3 = sym3();
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_EQ(s3.elements().front(), identity_permutation(3));
  EXPECT_ERROR_KIND(closure(6, {{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}}, 100), ErrorKind::GroupTooLarge);
  EXPECT_ERROR_KIND(closure(3, {{0, 0, 1}}), ErrorKind::InvalidArgument);
}

TEST(Closure, GroupAxioms) {
  const PermGroup g = closure(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}});
  EXPECT_EQ(g.order(), 120u);
  for (const auto& a : g.elements()) {
    EXPECT_TRUE(g.contains(inverse(a)));
    for (const auto& b : g.elements()) EXPECT_TRUE(g.contains(compose(a, b)));
  }
  for (const auto& gen : g.generators()) EXPECT_TRUE(g.contains(gen));
}

std::vector<std::set<Permutation>> classes_by_brute_force(const PermGroup& g) {
  std::vector<std::set<Permutation>> out;
  std::set<Permutation> seen;
  for (const auto& x : g.elements()) {
    if (seen.count(x)) continue;
    std::set<Permutation> cls;
    for (const auto& h : g.elements()) cls.insert(compose(compose(h, x), inverse(h)));
    seen.insert(cls.begin(), cls.end());
    out.push_back(cls);
  }
  return out;
}

void expect_classes_match(const PermGroup& g) {
  const auto classes = conjugacy_classes(g);
  std::set<std::set<Permutation>> got;
  std::size_t last = 0;
  for (const auto& c : classes) {
    EXPECT_GE(c.size(), last);
    last = c.size();
    std::set<Permutation> members;
    for (auto i : c) members.insert(g.elements()[i]);
    got.insert(members);
  }
  const auto expected = classes_by_brute_force(g);
  EXPECT_EQ(got, std::set<std::set<Permutation>>(expected.begin(), expected.end()));
}

TEST(ConjugacyClasses, Examples) {
  EXPECT_EQ(conjugacy_classes(closure(4, {})).size(), 1u);
  const auto s3 = conjugacy_classes(sym3());
  ASSERT_EQ(s3.size(), 3u);
  EXPECT_EQ(s3[0].size(), 1u);
  EXPECT_EQ(s3[1].size(), 2u);
  EXPECT_EQ(s3[2].size(), 3u);
  EXPECT_EQ(conjugacy_classes(shape_automorphism_group(centipede_shape(2, 3))).size(), 5u);
}

TEST(ConjugacyClasses, BruteForceOracle) {
  expect_classes_match(sym3());
  expect_classes_match(closure(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}));
  for (const auto& s : enumerate_complete_shapes(2, 4)) expect_classes_match(shape_automorphism_group(s));
  for (const auto& s : enumerate_complete_shapes(3, 3)) expect_classes_match(shape_automorphism_group(s));
}

TEST(Stabilizers, Examples) {
  const PermGroup s3 = sym3();
  EXPECT_EQ(pointwise_stabilizer(s3, {0, 1}).order(), 1u);
  EXPECT_EQ(setwise_stabilizer(s3, {0, 1}).order(), 2u);
}

TEST(Stabilizers, LagrangeAndInclusion) {
  for (const auto& s : enumerate_complete_shapes(2, 5)) {
    const PermGroup g = shape_automorphism_group(s);
    for (int a = 0; a < s.size(); ++a) {
      for (int b = a + 1; b < s.size(); ++b) {
        const auto pw = pointwise_stabilizer(g, {a, b});
        const auto sw = setwise_stabilizer(g, {a, b});
        EXPECT_EQ(g.order() % pw.order(), 0u);
        EXPECT_EQ(g.order() % sw.order(), 0u);
        EXPECT_TRUE(pw.is_subgroup_of(sw));
        EXPECT_TRUE(sw.is_subgroup_of(g));
      }
    }
  }
}

TEST(ShapeAutomorphisms, Examples) {
  EXPECT_EQ(shape_automorphism_group(star_shape(2)).order(), 6u);
  EXPECT_EQ(shape_automorphism_group(edge_shape(2)).order(), 2u);
  EXPECT_EQ(shape_automorphism_group(vertex_shape(2)).order(), 1u);
}

TEST(ShapeAutomorphisms, CentipedesAreDihedralOfOrderEight) {
  for (int k = 3; k <= 5; ++k) {
    const PermGroup g = shape_automorphism_group(centipede_shape(2, k));
    ASSERT_EQ(g.order(), 8u);
    bool presented = false;
    for (const auto& s : g.elements()) {
      for (const auto& t : g.elements()) {
        if (is_identity(s) || is_identity(t) || !is_identity(compose(s, s)) || !is_identity(compose(t, t))) continue;
        const Permutation st = compose(s, t);
        if (!is_identity(power(st, 4)) || is_identity(power(st, 2))) continue;
        presented = presented || closure(g.degree(), {s, t}).order() == 8;
      }
    }
    EXPECT_TRUE(presented) << k;
  }
}

TEST(ShapeAutomorphisms, MatchBruteForce) {
  int checked = 0;
  for (int q : {2, 3}) {
    for (const auto& s : enumerate_complete_shapes(q, 5)) {
      if (s.size() > 10) continue;
      const auto brute = oracle::automorphisms(s);
      EXPECT_EQ(as_set(shape_automorphism_group(s)), std::set<Permutation>(brute.begin(), brute.end()));
      ++checked;
    }
  }
  EXPECT_GE(checked, 6);
}

// Every automorphism of B(o, radius) in T_q fixing o, as a vertex map, built from
// one permutation of the children at each vertex of depth < radius.
std::vector<std::map<Vertex, Vertex>> ball_automorphisms(const TreeParams& t, int radius) {
  std::vector<std::map<Vertex, Vertex>> out{{{Vertex{}, Vertex{}}}};
  for (int d = 0; d < radius; ++d) {
    for (const auto& v : vertices_at_depth(t, d)) {
      const int n = t.labels_at(d);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<std::map<Vertex, Vertex>> next;
      for (const auto& f : out) {
        std::sort(perm.begin(), perm.end());
        do {
          auto g = f;
          for (int c = 0; c < n; ++c) {
            g[v.child(static_cast<Label>(c))] = g.at(v).child(static_cast<Label>(perm[c]));
          }
          next.push_back(std::move(g));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      out = std::move(next);
    }
  }
  return out;
}

TEST(ShapeAutomorphisms, PointwiseStabilizersComeFromTreeElements) {
  const TreeParams t(2);
  const auto autos = ball_automorphisms(t, 2);
  ASSERT_EQ(autos.size(), 48u);
  for (const auto& s : {star_shape(2), centipede_shape(2, 3), centipede_shape(2, 4)}) {
    EmbeddedSubtree e;
    for (const auto& cand : enumerate_embeddings(s, Vertex{}, 2)) {
      if (cand.is_internal_image(Vertex{})) {
        e = cand;
        break;
      }
    }
    ASSERT_FALSE(e.placement.empty());
    const PermGroup aut = shape_automorphism_group(s);
    for (const auto& sj : maximal_proper_complete_subtrees(s)) {
      if (std::find_if(sj.begin(), sj.end(), [&](int v) { return e.placement[v].is_root(); }) == sj.end()) continue;
      std::set<Permutation> induced;
      for (const auto& f : autos) {
        bool fixes = true, stabilizes = true;
        for (int v : sj) fixes = fixes && f.at(e.placement[v]) == e.placement[v];
        Permutation p(s.size());
        for (int v = 0; v < s.size() && stabilizes; ++v) {
          const auto pre = e.preimage(f.at(e.placement[v]));
          stabilizes = pre.has_value();
          if (pre) p[v] = *pre;
        }
        if (fixes && stabilizes) induced.insert(p);
      }
      EXPECT_EQ(induced, as_set(pointwise_stabilizer(aut, sj)));
    }
  }
}

}  // namespace
}  // namespace arbocoh

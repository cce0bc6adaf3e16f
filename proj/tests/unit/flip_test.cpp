#include <random>

#include <gtest/gtest.h>

#include "arbocoh/flip.hpp"
#include "arbocoh/sampling.hpp"
#include "test_util.hpp"

namespace arbocoh {
namespace {

RayPrefix ray(std::initializer_list<int> head, int depth = 12) {
  std::vector<Label> w;
  for (int l : head) w.push_back(static_cast<Label>(l));
  while (static_cast<int>(w.size()) < depth) w.push_back(0);
  return RayPrefix(Vertex(w));
}

// Checks the witness conditions from the isometry's vertex map: h fixes the
// subtree, and the image of the deepest prefix step of every ray is an outward
// step that stays on the expected target ray past the point where the rays separate.
void expect_witness(const FlipWitness& w, const std::vector<RayPrefix>& rays, const std::vector<Vertex>& subtree,
                    int depth) {
  EXPECT_NE(w.i, w.j);
  for (const auto& x : subtree) EXPECT_EQ(w.h.apply(x), x);
  int separation = 0;
  for (std::size_t a = 0; a < rays.size(); ++a) {
    for (std::size_t b = a + 1; b < rays.size(); ++b) separation = std::max(separation, lcp_length(rays[a].end(), rays[b].end()));
  }
  for (int k = 0; k < static_cast<int>(rays.size()); ++k) {
    const int target = k == w.i ? w.j : k == w.j ? w.i : k;
    const Vertex last = w.h.apply(rays[k].at(depth));
    const Vertex before = w.h.apply(rays[k].at(depth - 1));
    const int common = std::min(last.depth(), rays[target].depth());
    EXPECT_EQ(lcp_length(last, rays[target].end()), common) << "ray " << k;
    EXPECT_EQ(before, last.parent()) << "ray " << k;
    EXPECT_GT(common, separation) << "ray " << k;
  }
}

TEST(FindFlip, ThreeRaysAtRoot) {
  const TreeParams t(2);
  const std::vector<RayPrefix> rays{ray({0}), ray({1}), ray({2})};
  const auto w = find_flip(t, rays, std::vector<Vertex>{}, 12);
  EXPECT_EQ(w.median, Vertex{});
  EXPECT_EQ(w.secondary_median, Vertex{});
  EXPECT_EQ(w.h.apply(Vertex{}), Vertex{});
  expect_witness(w, rays, {}, 12);
  EXPECT_EQ(check_flip(w, rays, {}), "");
}

TEST(FindFlip, FigureConfiguration) {
  // gamma_0 and gamma_4 share the branch at [0]; gamma_1, gamma_3, gamma_5 the
  // branch at [1], with gamma_3 and gamma_5 splitting last at [1, 1]; gamma_2
  // goes through [2]. The subtree is an edge on the gamma_0 side.
  const TreeParams t(2);
  const std::vector<RayPrefix> rays{ray({0, 0}), ray({1, 0}), ray({2}), ray({1, 1, 0}), ray({0, 1}), ray({1, 1, 1})};
  const auto edges = enumerate_embeddings(edge_shape(2), Vertex{0, 0}, 2);
  const EmbeddedSubtree* s = nullptr;
  for (const auto& e : edges) {
    const auto img = e.image();
    if (std::count(e.placement.begin(), e.placement.begin() + 2, Vertex{0, 0}) &&
        std::count(e.placement.begin(), e.placement.begin() + 2, Vertex{0, 0, 1})) {
      s = &e;
    }
  }
  ASSERT_NE(s, nullptr);
  const auto w = find_flip(t, rays, *s, 12);
  EXPECT_EQ(std::min(w.i, w.j), 3);
  EXPECT_EQ(std::max(w.i, w.j), 5);
  EXPECT_EQ(w.secondary_median, (Vertex{1, 1}));
  expect_witness(w, rays, s->image(), 12);
}

TEST(FindFlip, Errors) {
  const TreeParams t(2);
  const auto star = enumerate_embeddings(star_shape(2), Vertex{}, 1).at(0);
  EXPECT_ERROR_KIND(find_flip(t, {ray({0}), ray({1}), ray({2})}, star, 12), ErrorKind::SubtreeHitsTriple);
  EXPECT_ERROR_KIND(find_flip(t, {ray({0}), ray({0}), ray({2})}, std::vector<Vertex>{}, 12), ErrorKind::NotDistinct);
  EXPECT_ERROR_KIND(find_flip(t, {ray({0, 1, 1}), ray({0, 1, 0}), ray({2})}, std::vector<Vertex>{}, 2),
                    ErrorKind::NotDistinct);
}

TEST(FindFlip, RandomInstancesInvolutionAndPairConditions) {
  std::mt19937_64 rng(31);
  const int depth = 12;
  for (int n = 0; n < 200; ++n) {
    const FlipInstance inst = random_flip_instance(depth, rng);
    const auto w = find_flip(inst.tree, inst.rays, inst.subtree, depth);
    expect_witness(w, inst.rays, inst.subtree, depth);

    // h is an involution wherever h(v) stays in the domain.
    for (const auto& [v, hv] : w.h.mapping()) {
      if (w.h.contains(hv)) EXPECT_EQ(w.h.apply(hv), v);
    }

    const Vertex& m2 = w.secondary_median;
    for (int k = 0; k < static_cast<int>(inst.rays.size()); ++k) {
      if (k == w.i || k == w.j) continue;
      EXPECT_EQ(gromov_product(inst.rays[k], inst.rays[w.i], m2), 0);
      EXPECT_EQ(gromov_product(inst.rays[k], inst.rays[w.j], m2), 0);
    }
    for (const auto& x : inst.subtree) {
      EXPECT_EQ(gromov_product(x, inst.rays[w.i], m2), 0);
      EXPECT_EQ(gromov_product(x, inst.rays[w.j], m2), 0);
    }
  }
}

}  // namespace
}  // namespace arbocoh

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "arbocoh/sampling.hpp"
#include "arbocoh/spherical.hpp"
#include "test_util.hpp"

namespace arbocoh {
namespace {

// phi(0) = 1, phi(1) = mu and (phi(d-1) + q phi(d+1)) / (q+1) = mu phi(d).
std::vector<Complex> phi_by_recurrence(int q, Complex z, int max_distance) {
  const Complex mu = mu_of_z(q, z);
  std::vector<Complex> phi{1.0, mu};
  for (int d = 1; d < max_distance; ++d) {
    phi.push_back((static_cast<double>(q + 1) * mu * phi[d] - phi[d - 1]) / static_cast<double>(q));
  }
  phi.resize(static_cast<std::size_t>(max_distance) + 1);
  return phi;
}

CylinderFunction random_function(const TreeParams& t, int depth, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  CylinderFunction f{depth, {}};
  for (std::size_t i = 0; i < count_at_depth(t, depth); ++i) f.coefficients.emplace_back(n(rng), n(rng));
  return f;
}

double max_diff(const TreeParams& t, CylinderFunction a, CylinderFunction b) {
  const int d = std::max(a.depth, b.depth);
  a = refine(t, a, d);
  b = refine(t, b, d);
  double out = 0;
  for (std::size_t i = 0; i < a.coefficients.size(); ++i) out = std::max(out, std::abs(a.coefficients[i] - b.coefficients[i]));
  return out;
}

const Complex kHalf{0.5, 0.0};
const Complex kPrincipal{0.5, 0.3};

TEST(MuOfZ, Examples) {
  for (int q : {2, 3, 5}) {
    EXPECT_NEAR(std::abs(mu_of_z(q, 1.0) - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(mu_of_z(q, 0.0) - 1.0), 0.0, 1e-14);
  }
  EXPECT_NEAR(mu_of_z(2, kHalf).real(), 2.0 * std::sqrt(2.0) / 3.0, 1e-14);
}

TEST(IsAdmissible, Examples) {
  EXPECT_TRUE(is_admissible(2, {0.5, 5.0}));
  EXPECT_TRUE(is_admissible(2, 0.3));
  EXPECT_TRUE(is_admissible(3, {0.3, M_PI / std::log(3.0)}));
  EXPECT_FALSE(is_admissible(2, 2.0));
  EXPECT_FALSE(is_admissible(2, {0.3, 0.5}));
  EXPECT_FALSE(is_admissible(2, -0.1));
}

TEST(IsAdmissible, MatchesRealBoundedMu) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> re(-0.5, 1.5), im(-3, 3);
  for (int n = 0; n < 500; ++n) {
    const int q = 2 + n % 2;
    const Complex z(re(rng), n % 5 == 0 ? 0.0 : im(rng));
    const Complex mu = mu_of_z(q, z);
    const bool bounded = std::abs(mu.imag()) < 1e-12 && std::abs(mu.real()) <= 1.0 + 1e-12;
    EXPECT_EQ(is_admissible(q, z), bounded) << z;
  }
}

TEST(PhiValues, MatchRecurrenceAndSymmetry) {
  for (int q : {2, 3}) {
    const double shift = M_PI / std::log(static_cast<double>(q));
    for (Complex z : {kHalf, Complex(0.5, 0.7), Complex(0.3, 0), Complex(0.3, shift), Complex(2.0, 0)}) {
      const auto phi = phi_values(q, z, 8);
      const auto oracle = phi_by_recurrence(q, z, 8);
      const auto mirror = phi_values(q, 1.0 - z, 8);
      ASSERT_EQ(phi.size(), 9u);
      EXPECT_NEAR(std::abs(phi[0] - 1.0), 0.0, 1e-15);
      for (int d = 0; d <= 8; ++d) {
        const double scale = std::max(1.0, std::abs(oracle[d]));
        EXPECT_NEAR(std::abs(phi[d] - oracle[d]) / scale, 0.0, 1e-12) << q << " " << z << " " << d;
        EXPECT_NEAR(std::abs(phi[d] - mirror[d]) / scale, 0.0, 1e-12);
      }
      if (is_admissible(q, z)) EXPECT_LT(eigen_residual(q, z, 8), 1e-10);
    }
  }
}

TEST(BusemannLevelMasses, SumToOne) {
  for (int q : {2, 3}) {
    for (int d = 0; d <= 6; ++d) {
      Rational total = 0;
      for (const auto& m : busemann_level_masses(q, d)) total += m;
      EXPECT_EQ(total, Rational(1));
    }
  }
}

TEST(EigenResidual, DetectsPerturbation) {
  auto phi = phi_values(2, kHalf, 8);
  EXPECT_LT(eigen_residual(2, kHalf, phi), 1e-10);
  phi[3] += 1e-3;
  EXPECT_GE(eigen_residual(2, kHalf, phi), 1e-4);
}

TEST(Gram, PositiveForAdmissibleAndViolatedForZTwo) {
  std::mt19937_64 rng(13);
  const TreeParams t(2);
  EXPECT_NEAR(gram_min_eigenvalue(2, kHalf, {Vertex{1, 0}}), 1.0, 1e-12);
  for (Complex z : {kHalf, kPrincipal, Complex(0.3, 0)}) {
    std::vector<Vertex> vs;
    while (vs.size() < 20) {
      const Vertex v = random_vertex(t, 4, rng);
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    }
    EXPECT_GE(gram_min_eigenvalue(2, z, vs), -1e-9) << z;
  }
  const auto path = geodesic(Vertex{0, 0, 0}, Vertex{1, 0});
  ASSERT_EQ(path.size(), 6u);
  EXPECT_LT(gram_min_eigenvalue(2, 2.0, path), -1e-6);
}

TEST(CylinderFunction, RefineAndIntegrate) {
  const TreeParams t(3);
  std::mt19937_64 rng(1);
  const auto f = random_function(t, 2, rng);
  const auto g = refine(t, f, 4);
  EXPECT_NEAR(std::abs(integrate(t, f) - integrate(t, g)), 0.0, 1e-12);
  EXPECT_EQ(g.at(t, Vertex{2, 1, 0, 2}), f.at(t, Vertex{2, 1}));
  EXPECT_NEAR(std::abs(integrate(t, constant_function(t, 3, 2.5)) - 2.5), 0.0, 1e-12);
}

TEST(PoissonCylinderIntegral, SumsToPhi) {
  // Summing the cylinder integrals over a full level recovers phi_z(|x|).
  for (int q : {2, 3}) {
    const TreeParams t(q);
    const Complex z(0.5, 0.7);
    const Vertex x{1, 0, 1};
    Complex total = 0;
    for (const auto& w : vertices_at_depth(t, 4)) total += poisson_cylinder_integral(t, x, w).evaluate(q, z);
    EXPECT_NEAR(std::abs(total - phi_values(q, z, 3)[3]), 0.0, 1e-12);
  }
}

TEST(Intertwiner, ConstantsAndProbeResidual) {
  const TreeParams t(2);
  for (int n = 1; n <= 4; ++n) {
    const auto half = intertwiner_matrix(2, kHalf, n);
    const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(count_at_depth(t, n)));
    EXPECT_LT((half.matrix * ones - ones).norm(), 1e-8);
    for (Complex z : {Complex(0.3, 0), kPrincipal}) {
      const auto iz = intertwiner_matrix(2, z, n);
      EXPECT_LT(iz.probe_residual, 1e-8);
      CylinderFunction image{n, {}};
      const Eigen::VectorXcd v = iz.matrix * ones;
      image.coefficients.assign(v.data(), v.data() + v.size());
      EXPECT_NEAR(std::abs(integrate(t, image) - 1.0), 0.0, 1e-8);
    }
  }
  EXPECT_ERROR_KIND(intertwiner_matrix(2, 1.0, 2), ErrorKind::IllConditioned);
  EXPECT_ERROR_KIND(intertwiner_matrix(2, 0.0, 2), ErrorKind::IllConditioned);
}

TEST(InnerProduct, ConstantsHermitianAndPositive) {
  const TreeParams t(2);
  std::mt19937_64 rng(19);
  const auto one = constant_function(t, 2, 1.0);
  EXPECT_NEAR(std::abs(inner_product_z(t, one, one, kHalf) - 1.0), 0.0, 1e-12);
  for (int n = 0; n < 100; ++n) {
    const auto f = random_function(t, 1 + n % 3, rng);
    const auto g = random_function(t, 2, rng);
    const Complex fg = inner_product_z(t, f, g, kPrincipal), gf = inner_product_z(t, g, f, kPrincipal);
    EXPECT_NEAR(std::abs(fg - std::conj(gf)), 0.0, 1e-8);
    EXPECT_GE(inner_product_z(t, f, f, kPrincipal).real(), -1e-8);
    EXPECT_GE(inner_product_z(t, f, f, Complex(0.3, 0)).real(), -1e-8);
  }
}

TEST(PiZ, IdentityAndK) {
  const TreeParams t(2);
  std::mt19937_64 rng(29);
  const auto phi = random_function(t, 2, rng);
  const auto id = TreeIsometry::identity(t, ball(t, Vertex{}, 3));
  EXPECT_LT(max_diff(t, pi_z_apply(id, phi, kPrincipal), phi), 1e-14);

  for (int n = 0; n < 10; ++n) {
    const auto k = extend_isometry_random(TreeIsometry::identity(t, {Vertex{}}), 3, rng);
    const auto out = pi_z_apply(k, phi, kPrincipal);
    ASSERT_EQ(out.depth, phi.depth);
    auto a = out.coefficients, b = phi.coefficients;
    const auto by_abs = [](Complex u, Complex v) {
      return std::make_pair(u.real(), u.imag()) < std::make_pair(v.real(), v.imag());
    };
    std::sort(a.begin(), a.end(), by_abs);
    std::sort(b.begin(), b.end(), by_abs);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, 1e-14);
  }
}

TEST(PiZ, CompositionAndUnitarity) {
  const TreeParams t(2);
  std::mt19937_64 rng(37);
  for (int n = 0; n < 20; ++n) {
    const auto f = random_isometry(t, 7, 1, rng);
    const auto g = random_isometry(t, 7, 1, rng);
    const auto phi = random_function(t, 2, rng);
    const auto psi = random_function(t, 2, rng);
    const auto lhs = pi_z_apply(f.compose(g), phi, kPrincipal);
    const auto rhs = pi_z_apply(f, pi_z_apply(g, phi, kPrincipal), kPrincipal);
    EXPECT_LT(max_diff(t, lhs, rhs), 1e-9);

    const Complex before = inner_product_z(t, phi, psi, kPrincipal);
    const Complex after = inner_product_z(t, pi_z_apply(f, phi, kPrincipal), pi_z_apply(f, psi, kPrincipal), kPrincipal);
    EXPECT_LT(std::abs(after - before), 1e-6);
  }
}

TEST(PiZ, InsufficientDomain) {
  const TreeParams t(2);
  const auto small = TreeIsometry::identity(t, ball(t, Vertex{}, 1));
  EXPECT_ERROR_KIND(pi_z_apply(small, constant_function(t, 3, 1.0), kHalf), ErrorKind::InsufficientDepth);
}

}  // namespace
}  // namespace arbocoh

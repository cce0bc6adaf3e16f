#include "arbocoh/spherical.hpp"

#include <cmath>

#include "arbocoh/error.hpp"

namespace arbocoh {

namespace {

Complex qpow(int q, Complex exponent) { return std::exp(exponent * std::log(static_cast<double>(q))); }

double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace

Complex mu_of_z(int q, Complex z) {
  return (qpow(q, z) + qpow(q, 1.0 - z)) / static_cast<double>(q + 1);
}

bool is_admissible(int q, Complex z) {
  constexpr double eps = 1e-12;
  if (std::abs(z.real() - 0.5) < eps) return true;
  const double k = z.imag() * std::log(static_cast<double>(q)) / M_PI;
  return std::abs(k - std::round(k)) < eps && z.real() >= -eps && z.real() <= 1 + eps;
}

std::vector<Rational> busemann_level_masses(int q, int d) {
  const TreeParams tree(q);
  if (d == 0) return {Rational(1)};
  // x = [0, 0, ..., 0]; rays through x_j but not x_{j+1} have lcp j with x.
  Vertex x;
  for (int i = 0; i < d; ++i) x = x.child(0);
  std::vector<Rational> masses(static_cast<std::size_t>(d + 1));
  for (int j = 0; j <= d; ++j) {
    const Rational through = root_cylinder_mass(tree, x.prefix(j));
    masses[j] = j == d ? through : through - root_cylinder_mass(tree, x.prefix(j + 1));
  }
  return masses;
}

std::vector<Complex> phi_values(int q, Complex z, int max_distance) {
  std::vector<Complex> phi;
  for (int d = 0; d <= max_distance; ++d) {
    const auto masses = busemann_level_masses(q, d);
    Complex sum = 0;
    for (int j = 0; j <= d; ++j) sum += to_double(masses[j]) * qpow(q, z * static_cast<double>(2 * j - d));
    phi.push_back(sum);
  }
  return phi;
}

double eigen_residual(int q, Complex z, const std::vector<Complex>& phi) {
  const Complex mu = mu_of_z(q, z);
  double worst = phi.size() > 1 ? std::abs(phi[1] - mu * phi[0]) : 0.0;
  for (std::size_t d = 1; d + 1 < phi.size(); ++d) {
    const Complex avg = (phi[d - 1] + static_cast<double>(q) * phi[d + 1]) / static_cast<double>(q + 1);
    worst = std::max(worst, std::abs(avg - mu * phi[d]));
  }
  return worst;
}

double eigen_residual(int q, Complex z, int max_distance) {
  return eigen_residual(q, z, phi_values(q, z, max_distance));
}

double gram_min_eigenvalue(int q, Complex z, const std::vector<Vertex>& vertices) {
  const auto n = static_cast<Eigen::Index>(vertices.size());
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty vertex set");
  int reach = 0;
  for (const auto& a : vertices) {
    for (const auto& b : vertices) reach = std::max(reach, distance(a, b));
  }
  const auto phi = phi_values(q, z, reach);
  Eigen::MatrixXcd gram(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) gram(i, j) = phi[distance(vertices[i], vertices[j])];
  }
  const Eigen::MatrixXcd hermitian = (gram + gram.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

Complex CylinderFunction::at(const TreeParams& tree, const Vertex& w) const {
  if (w.depth() < depth) throw Error(ErrorKind::InsufficientDepth, "cylinder coarser than the function");
  return coefficients.at(index_at_depth(tree, w.prefix(depth)));
}

CylinderFunction constant_function(const TreeParams& tree, int depth, Complex value) {
  return {depth, std::vector<Complex>(count_at_depth(tree, depth), value)};
}

CylinderFunction refine(const TreeParams& tree, const CylinderFunction& f, int depth) {
  if (depth < f.depth) throw Error(ErrorKind::InvalidArgument, "refine cannot coarsen");
  if (depth == f.depth) return f;
  CylinderFunction out{depth, {}};
  out.coefficients.reserve(count_at_depth(tree, depth));
  for (const auto& w : vertices_at_depth(tree, depth)) out.coefficients.push_back(f.at(tree, w));
  return out;
}

Complex integrate(const TreeParams& tree, const CylinderFunction& f) {
  if (f.depth == 0) return f.coefficients.at(0);
  const double mass = to_double(cylinder_measure(tree, Vertex{}, vertices_at_depth(tree, f.depth).front()));
  Complex sum = 0;
  for (const auto& c : f.coefficients) sum += c;
  return sum * mass;
}

void PowerSum::add(int exponent, const Rational& weight) {
  if (weight == 0) return;
  auto& slot = terms[exponent];
  slot += weight;
  if (slot == 0) terms.erase(exponent);
}

Complex PowerSum::evaluate(int q, Complex z) const {
  Complex sum = 0;
  for (const auto& [b, c] : terms) sum += to_double(c) * qpow(q, z * static_cast<double>(b));
  return sum;
}

// B_g(o, x) = 2 l - |x| with l the common-prefix length of g and x. Over U(o, w)
// the value of l is fixed unless w is a proper prefix of x, in which case the
// cylinder splits along the levels between |w| and |x|.
PowerSum poisson_cylinder_integral(const TreeParams& tree, const Vertex& x, const Vertex& w) {
  if (w.is_root()) throw Error(ErrorKind::DegenerateCylinder, "U(o, o) is the whole boundary");
  PowerSum out;
  const int l = lcp_length(w, x);
  if (l < w.depth() && l < x.depth()) {
    out.add(2 * l - x.depth(), root_cylinder_mass(tree, w));
  } else if (l == x.depth()) {
    out.add(x.depth(), root_cylinder_mass(tree, w));
  } else {
    for (int j = w.depth(); j < x.depth(); ++j) {
      out.add(2 * j - x.depth(),
              root_cylinder_mass(tree, x.prefix(j)) - root_cylinder_mass(tree, x.prefix(j + 1)));
    }
    out.add(x.depth(), root_cylinder_mass(tree, x));
  }
  return out;
}

}  // namespace arbocoh

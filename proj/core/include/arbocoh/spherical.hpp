#pragma once

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "arbocoh/isometry.hpp"

namespace arbocoh {

using Complex = std::complex<double>;

/// mu(z) = (q^z + q^{1-z}) / (q+1), the eigenvalue of the neighbour-averaging operator.
Complex mu_of_z(int q, Complex z);

/// Unitarity criterion for phi_z: Re z = 1/2, or 0 <= Re z <= 1 with Im z a multiple
/// of pi / ln q.
bool is_admissible(int q, Complex z);

/// phi_z(d) for d = 0..D, from the exact Busemann level masses
///   phi_z(d) = sum_j m_j q^{z(2j - d)},
/// where m_j is the mu_o-mass of the rays leaving the geodesic [o, x] at depth j.
std::vector<Complex> phi_values(int q, Complex z, int max_distance);

/// Exact level masses m_0..m_d used by phi_values.
std::vector<Rational> busemann_level_masses(int q, int d);

/// max_d |(phi(d-1) + q phi(d+1))/(q+1) - mu phi(d)| together with |phi(1) - mu phi(0)|.
double eigen_residual(int q, Complex z, int max_distance);
double eigen_residual(int q, Complex z, const std::vector<Complex>& phi);

/// Minimum eigenvalue of the Hermitian part of [phi_z(d(x_i, x_j))].
double gram_min_eigenvalue(int q, Complex z, const std::vector<Vertex>& vertices);

/// A locally constant function on the boundary: one coefficient per depth-n
/// cylinder, in vertices_at_depth order.
struct CylinderFunction {
  int depth = 0;
  std::vector<Complex> coefficients;

  Complex at(const TreeParams& tree, const Vertex& w) const;
};

CylinderFunction constant_function(const TreeParams& tree, int depth, Complex value);
/// Re-expresses f on the finer depth-n partition.
CylinderFunction refine(const TreeParams& tree, const CylinderFunction& f, int depth);
/// Integral against mu_o.
Complex integrate(const TreeParams& tree, const CylinderFunction& f);

/// Sum_b coefficient_b q^{z b}: the exact form of cylinder integrals of P^z.
struct PowerSum {
  std::map<int, Rational> terms;

  void add(int exponent, const Rational& weight);
  Complex evaluate(int q, Complex z) const;
};

/// Integral of q^{z B_g(o, x)} over g in U(o, w), w != o.
PowerSum poisson_cylinder_integral(const TreeParams& tree, const Vertex& x, const Vertex& w);

struct Intertwiner {
  int depth = 0;
  Eigen::MatrixXcd matrix;  // acts on depth-n coefficient vectors
  double residual = 0;      // defining identity over B(o, n)
  double probe_residual = 0;  // defining identity over B(o, n + 2)
};

/// Least-squares solution of A_z I = A_{1-z}, with A_z[x][w] the integral of P^z(o,x,.)
/// over U(o, w). Throws IllConditioned when mu(z) = +-1, the system is rank
/// deficient, or either residual exceeds `tolerance`.
Intertwiner intertwiner_matrix(int q, Complex z, int depth, double tolerance = 1e-8);

/// (f, g)_z. On the principal series (Re z = 1/2) this is the L^2(mu_o) pairing;
/// otherwise it is the integral of (I_z f) conj(g).
Complex inner_product_z(const TreeParams& tree, const CylinderFunction& f, const CylinderFunction& g,
                        Complex z, double tolerance = 1e-8);

/// (pi'_z(f) phi)(g) = P^z(o, f(o), g) phi(f^{-1} g), returned at depth
/// depth(phi) + |f(o)|. f must be defined on a neighbourhood of f^{-1} of that sphere;
/// throws InsufficientDepth otherwise.
CylinderFunction pi_z_apply(const TreeIsometry& f, const CylinderFunction& phi, Complex z);

}  // namespace arbocoh

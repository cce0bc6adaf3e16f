#include <cmath>

#include "arbocoh/error.hpp"
#include "arbocoh/spherical.hpp"

namespace arbocoh {

namespace {

Eigen::MatrixXcd poisson_matrix(const TreeParams& tree, Complex z, const std::vector<Vertex>& rows,
                                const std::vector<Vertex>& cylinders) {
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cylinders.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cylinders.size(); ++j) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          poisson_cylinder_integral(tree, rows[i], cylinders[j]).evaluate(tree.q, z);
    }
  }
  return a;
}

bool principal_series(Complex z) { return std::abs(z.real() - 0.5) < 1e-12; }

}  // namespace

Intertwiner intertwiner_matrix(int q, Complex z, int depth, double tolerance) {
  if (depth < 1) throw Error(ErrorKind::InvalidArgument, "intertwiner depth must be at least 1");
  const Complex mu = mu_of_z(q, z);
  if (std::abs(mu - 1.0) < 1e-12 || std::abs(mu + 1.0) < 1e-12) {
    throw Error(ErrorKind::IllConditioned, "mu(z) = +-1 is excluded");
  }
  const TreeParams tree(q);
  const auto cylinders = vertices_at_depth(tree, depth);
  const auto rows = ball(tree, Vertex{}, depth);
  const Eigen::MatrixXcd az = poisson_matrix(tree, z, rows, cylinders);
  const Eigen::MatrixXcd a1z = poisson_matrix(tree, 1.0 - z, rows, cylinders);

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(az);
  if (cod.rank() < az.cols()) throw Error(ErrorKind::IllConditioned, "P^z system is rank deficient");

  Intertwiner out;
  out.depth = depth;
  out.matrix = cod.solve(a1z);
  out.residual = (az * out.matrix - a1z).cwiseAbs().maxCoeff();

  const auto probes = ball(tree, Vertex{}, depth + 2);
  out.probe_residual =
      (poisson_matrix(tree, z, probes, cylinders) * out.matrix - poisson_matrix(tree, 1.0 - z, probes, cylinders))
          .cwiseAbs()
          .maxCoeff();
  if (out.residual > tolerance || out.probe_residual > tolerance) {
    throw Error(ErrorKind::IllConditioned, "intertwiner residual " + std::to_string(std::max(out.residual, out.probe_residual)));
  }
  return out;
}

Complex inner_product_z(const TreeParams& tree, const CylinderFunction& f, const CylinderFunction& g, Complex z,
                        double tolerance) {
  const int depth = std::max({f.depth, g.depth, 1});
  const CylinderFunction ff = refine(tree, f, depth);
  const CylinderFunction gg = refine(tree, g, depth);
  const auto n = static_cast<Eigen::Index>(ff.coefficients.size());
  Eigen::VectorXcd fv = Eigen::Map<const Eigen::VectorXcd>(ff.coefficients.data(), n);
  const Eigen::VectorXcd gv = Eigen::Map<const Eigen::VectorXcd>(gg.coefficients.data(), n);
  if (!principal_series(z)) fv = intertwiner_matrix(tree.q, z, depth, tolerance).matrix * fv;
  const double mass = static_cast<double>(root_cylinder_mass(tree, vertices_at_depth(tree, depth).front()));
  return gv.dot(fv) * mass;  // dot conjugates its left argument
}

CylinderFunction pi_z_apply(const TreeIsometry& f, const CylinderFunction& phi, Complex z) {
  const TreeParams& tree = f.tree();
  const Vertex fo = f.apply(Vertex{});
  const int depth = std::max(phi.depth, 1) + fo.depth();
  const CylinderFunction source = refine(tree, phi, std::max(phi.depth, 1));
  const TreeIsometry inv = f.inverse();

  CylinderFunction out{depth, {}};
  out.coefficients.reserve(count_at_depth(tree, depth));
  for (const auto& w : vertices_at_depth(tree, depth)) {
    if (!inv.contains(w)) {
      throw Error(ErrorKind::InsufficientDepth, "isometry does not reach " + w.to_string());
    }
    // |w| > |f(o)|, so U(o, w) = U(f(o), w) and its preimage is U(o, f^{-1}(w)).
    const Vertex v = inv.apply(w);
    const int b = 2 * lcp_length(w, fo) - fo.depth();
    const Complex kernel = std::exp(z * static_cast<double>(b) * std::log(static_cast<double>(tree.q)));
    out.coefficients.push_back(kernel * source.at(tree, v));
  }
  return out;
}

}  // namespace arbocoh

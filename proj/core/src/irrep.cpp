#include "arbocoh/irrep.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "arbocoh/error.hpp"

namespace arbocoh {

const Eigen::MatrixXcd& IrrepModel::operator()(const Permutation& p) const {
  const std::size_t idx = group.index_of(p);
  if (idx >= group.order()) throw Error(ErrorKind::NotASubgroup, "permutation is not in the group");
  return matrices[idx];
}

namespace {

struct Tables {
  std::vector<std::vector<std::size_t>> mul;  // mul[a][b] = index of a*b
  std::vector<std::size_t> inv;
};

Tables group_tables(const PermGroup& g) {
  const std::size_t n = g.order();
  Tables t;
  t.mul.assign(n, std::vector<std::size_t>(n));
  t.inv.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    t.inv[a] = g.index_of(inverse(g.elements()[a]));
    for (std::size_t b = 0; b < n; ++b) t.mul[a][b] = g.index_of(compose(g.elements()[a], g.elements()[b]));
  }
  return t;
}

}  // namespace

IrrepModel realize_irrep(const CharacterTable& t, std::size_t row, std::uint64_t seed, int max_retries) {
  if (row >= t.rows()) throw Error(ErrorKind::InvalidArgument, "character row out of range");
  const PermGroup& g = t.group;
  const auto n = static_cast<Eigen::Index>(g.order());
  const int d = t.degrees[row];
  const Tables tab = group_tables(g);

  IrrepModel model;
  model.group = g;
  model.row = row;
  model.degree = d;

  Eigen::MatrixXcd p(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const std::size_t ab_inv = tab.mul[static_cast<std::size_t>(a)][tab.inv[static_cast<std::size_t>(b)]];
      p(a, b) = static_cast<double>(d) / static_cast<double>(n) * std::conj(t.value(row, ab_inv));
    }
  }
  const Eigen::MatrixXcd complement = Eigen::MatrixXcd::Identity(n, n) - p;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    // X = sum_h c_h (R(h) + R(h)^T) with R(h) e_g = e_{g h^-1}; it commutes with
    // the left regular action.
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
    double weight = 0;
    for (std::size_t h = 0; h < static_cast<std::size_t>(n); ++h) {
      const double c = coeff(rng);
      weight += 2 * std::abs(c);
      for (std::size_t gi = 0; gi < static_cast<std::size_t>(n); ++gi) {
        const auto a = static_cast<Eigen::Index>(tab.mul[gi][tab.inv[h]]);
        const auto b = static_cast<Eigen::Index>(gi);
        x(a, b) += c;
        x(b, a) += c;
      }
    }
    const double shift = 10 * (weight + 1);
    const Eigen::MatrixXcd y = p * x.cast<Complex>() * p + shift * complement;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(y);
    if (solver.info() != Eigen::Success) continue;
    const Eigen::VectorXd& ev = solver.eigenvalues();

    // First cluster of exactly d eigenvalues inside the isotypic component.
    Eigen::Index start = -1;
    for (Eigen::Index i = 0; i < n;) {
      Eigen::Index j = i + 1;
      while (j < n && ev[j] - ev[j - 1] < 1e-7 * (1 + std::abs(ev[j]))) ++j;
      if (std::abs(ev[i] - shift) > 1e-6 * shift && j - i == d) {
        start = i;
        break;
      }
      i = j;
    }
    if (start < 0) continue;
    const Eigen::MatrixXcd basis = solver.eigenvectors().middleCols(start, d);

    model.matrices.assign(static_cast<std::size_t>(n), Eigen::MatrixXcd(d, d));
    for (std::size_t gi = 0; gi < static_cast<std::size_t>(n); ++gi) {
      Eigen::MatrixXcd moved(n, d);
      for (Eigen::Index a = 0; a < n; ++a) {
        moved.row(a) = basis.row(static_cast<Eigen::Index>(tab.mul[tab.inv[gi]][static_cast<std::size_t>(a)]));
      }
      model.matrices[gi] = basis.adjoint() * moved;
    }
    if (unitarity_residual(model) < 1e-10 && multiplicativity_residual(model) < 1e-9 &&
        trace_residual(model, t) < 1e-9) {
      return model;
    }
  }
  throw Error(ErrorKind::NumericalDegeneracy, "could not isolate an irreducible subspace");
}

Eigen::MatrixXcd invariant_projector(const IrrepModel& m, const PermGroup& h) {
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(m.degree, m.degree);
  for (const auto& p : h.elements()) sum += m(p);
  return sum / static_cast<double>(h.order());
}

int numerical_rank(const Eigen::MatrixXcd& a, double tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()[i] > tol) ++rank;
  }
  return rank;
}

double unitarity_residual(const IrrepModel& m) {
  double worst = 0;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m.degree, m.degree);
  for (const auto& r : m.matrices) worst = std::max(worst, (r.adjoint() * r - id).cwiseAbs().maxCoeff());
  return worst;
}

double multiplicativity_residual(const IrrepModel& m) {
  double worst = 0;
  const auto& els = m.group.elements();
  for (std::size_t a = 0; a < els.size(); ++a) {
    for (std::size_t b = 0; b < els.size(); ++b) {
      const std::size_t ab = m.group.index_of(compose(els[a], els[b]));
      worst = std::max(worst, (m.matrices[ab] - m.matrices[a] * m.matrices[b]).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double trace_residual(const IrrepModel& m, const CharacterTable& t) {
  double worst = 0;
  for (std::size_t gi = 0; gi < m.matrices.size(); ++gi) {
    worst = std::max(worst, std::abs(m.matrices[gi].trace() - t.value(m.row, gi)));
  }
  return worst;
}

}  // namespace arbocoh

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "arbocoh/character_table.hpp"

namespace arbocoh {

/// Explicit unitary matrices of one irreducible, indexed like group.elements().
struct IrrepModel {
  PermGroup group;
  std::size_t row = 0;
  int degree = 0;
  std::vector<Eigen::MatrixXcd> matrices;

  const Eigen::MatrixXcd& operator()(std::size_t element) const { return matrices.at(element); }
  /// Throws NotASubgroup when p is not a group element.
  const Eigen::MatrixXcd& operator()(const Permutation& p) const;
};

/// Cuts an irreducible subspace out of the regular representation: the isotypic
/// projector selects the d^2-dimensional component and a random Hermitian element
/// of the commuting right action splits it into d-dimensional pieces.
IrrepModel realize_irrep(const CharacterTable& t, std::size_t row, std::uint64_t seed = 0, int max_retries = 8);

/// (1/|H|) sum_h rho(h): the orthogonal projector onto V^H.
Eigen::MatrixXcd invariant_projector(const IrrepModel& m, const PermGroup& h);
/// Numerical rank with singular-value cutoff `tol`.
int numerical_rank(const Eigen::MatrixXcd& a, double tol = 1e-8);

double unitarity_residual(const IrrepModel& m);
double multiplicativity_residual(const IrrepModel& m);
double trace_residual(const IrrepModel& m, const CharacterTable& t);

}  // namespace arbocoh

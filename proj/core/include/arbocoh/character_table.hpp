#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "arbocoh/perm_group.hpp"

namespace arbocoh {

using Complex = std::complex<double>;

struct CharacterTableOptions {
  int max_retries = 8;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

struct CharacterTable {
  PermGroup group;
  std::vector<std::vector<std::size_t>> classes;  // indices into group.elements()
  std::vector<std::size_t> class_of;              // element index -> class
  /// characters[row][class]; rows sorted by degree, then by values in decreasing order.
  std::vector<std::vector<Complex>> characters;
  std::vector<int> degrees;

  std::size_t rows() const noexcept { return characters.size(); }
  Complex value(std::size_t row, std::size_t element) const { return characters.at(row).at(class_of.at(element)); }
  Complex value(std::size_t row, const Permutation& p) const;
};

/// Burnside's method: simultaneous eigenvectors of the class multiplication
/// matrices. Eigenvectors are refined in 50-digit arithmetic and values within 1e-9
/// of an integer are snapped. Throws NumericalDegeneracy after max_retries failed
/// attempts.
CharacterTable character_table(const PermGroup& g, const CharacterTableOptions& options = {});

/// max |<chi_i, chi_j> - delta_ij| over pairs of rows.
double row_orthogonality_residual(const CharacterTable& t);
/// max |sum_i chi_i(C_a) conj(chi_i(C_b)) - delta_ab |G|/|C_a|| over pairs of classes.
double column_orthogonality_residual(const CharacterTable& t);

/// dim V^H = (1/|H|) sum_h chi(h). Throws NotASubgroup and NonIntegralDimension.
int invariant_dim(const CharacterTable& t, std::size_t row, const PermGroup& h);

/// Short text form of a row: the values on each class, "a" or "a+bi", 6 digits.
std::string character_fingerprint(const CharacterTable& t, std::size_t row);

}  // namespace arbocoh

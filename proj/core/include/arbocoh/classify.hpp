#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "arbocoh/character_table.hpp"

namespace arbocoh {

/// Pairs (x, y) of degree-1 vertices, x != y, with x outside one maximal proper
/// complete subtree and y outside a different one. Sorted lexicographically.
std::vector<std::pair<int, int>> admissible_pairs(const Shape& s);

/// No maximal proper complete subtree S_j has a nonzero vector fixed by the
/// pointwise stabilizer A_j. `t` must be the table of shape_automorphism_group(s).
/// Throws TooSmall when diameter(s) < 2.
bool is_nondegenerate(const Shape& s, const CharacterTable& t, std::size_t row);

/// dim V^{Q(x,y)} - dim V^{Q~(x,y)} for a centipede. Throws NotACentipede,
/// DegenerateIrrep and BadVertexChoice.
int h2_dimension(const Shape& s, const CharacterTable& t, std::size_t row, int x, int y);

struct NondegenerateEntry {
  std::size_t row = 0;
  int degree = 0;
  int h2 = 0;
};

/// Every non-degenerate row of Aut(s) with its degree-2 contribution.
std::vector<NondegenerateEntry> enumerate_nondegenerate(const Shape& s, const CharacterTableOptions& options = {});

/// Row of the q = 2 centipede group (k >= 3) with degree 1 and chi(s) = chi(t) = -1,
/// where s generates Q~(x, y) for the canonical pair and t swaps x with the other
/// leaf at its end. Its kernel is <st>.
std::size_t sign_kernel_st_row(const Shape& s, const CharacterTable& t);

struct RepDescriptor {
  enum class Kind { Spherical, Special, Cuspidal };
  Kind kind = Kind::Spherical;
  int q = 2;
  std::complex<double> z{0.5, 0.0};        // spherical
  int sign = 1;                            // special: +1 or -1
  std::shared_ptr<const Shape> shape;      // cuspidal
  std::size_t row = 0;                     // cuspidal: row of character_table(Aut(shape))

  static RepDescriptor spherical(int q, std::complex<double> z);
  static RepDescriptor special(int q, int sign);
  static RepDescriptor cuspidal(std::shared_ptr<const Shape> shape, std::size_t row);
};

/// dim H^n_cb(Aut(T_q), H_pi). Invalid descriptors (inadmissible z, bad sign,
/// incomplete or too small shape, row out of range or degenerate, n < 1) throw
/// InvalidDescriptor.
int classify_bounded_cohomology(const RepDescriptor& d, int n);

}  // namespace arbocoh

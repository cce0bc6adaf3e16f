#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "arbocoh/shapes.hpp"

namespace arbocoh {

/// p[i] is the image of point i.
using Permutation = std::vector<int>;

inline constexpr std::size_t kDefaultGroupBound = 1'000'000;

Permutation identity_permutation(int degree);
/// (a * b)(i) = a(b(i)): apply b first.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
bool is_identity(const Permutation& p);
/// Throws InvalidArgument unless p is a bijection of {0..degree-1}.
void check_permutation(const Permutation& p, int degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

class PermGroup {
 public:
  PermGroup() = default;

  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }

  /// Position of p in elements(), or order() when p is not in the group.
  std::size_t index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p) < order(); }
  bool is_subgroup_of(const PermGroup& other) const;

  friend PermGroup closure(int degree, const std::vector<Permutation>& generators, std::size_t bound);
  friend PermGroup subgroup_of_elements(const PermGroup& parent, std::vector<Permutation> elements);

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

/// Breadth-first closure; elements are listed in discovery order starting from the
/// identity. Throws GroupTooLarge once the order would exceed `bound`.
PermGroup closure(int degree, const std::vector<Permutation>& generators,
                  std::size_t bound = kDefaultGroupBound);

/// Subgroup given by an element list already known to be closed (such as a
/// stabilizer). Elements are kept in the parent's order.
PermGroup subgroup_of_elements(const PermGroup& parent, std::vector<Permutation> elements);

/// Classes as lists of indices into G.elements(), sorted by (size, smallest member).
std::vector<std::vector<std::size_t>> conjugacy_classes(const PermGroup& g);

PermGroup pointwise_stabilizer(const PermGroup& g, const std::vector<int>& points);
PermGroup setwise_stabilizer(const PermGroup& g, const std::vector<int>& points);

/// Aut(s) acting on shape vertex indices.
PermGroup shape_automorphism_group(const Shape& s, std::size_t bound = kDefaultGroupBound);

}  // namespace arbocoh

#pragma once

#include <set>
#include <vector>

#include "arbocoh/perm_group.hpp"

namespace arbocoh::oracle {

/// Every subgroup generated by at most two elements, deduplicated. For Sym(3),
/// Sym(4) and the dihedral group of order 8 this is every subgroup.
inline std::vector<PermGroup> two_generated_subgroups(const PermGroup& g) {
  std::vector<PermGroup> out;
  std::set<std::set<Permutation>> seen;
  for (const auto& a : g.elements()) {
    for (const auto& b : g.elements()) {
      PermGroup h = closure(g.degree(), {a, b});
      std::set<Permutation> key(h.elements().begin(), h.elements().end());
      if (seen.insert(key).second) out.push_back(std::move(h));
    }
  }
  return out;
}

inline PermGroup sym(int n) {
  Permutation t(n), c(n);
  for (int i = 0; i < n; ++i) {
    t[i] = i;
    c[i] = (i + 1) % n;
  }
  std::swap(t[0], t[1]);
  return closure(n, {t, c});
}

/// The order-8 dihedral group acting on the corners of a square.
inline PermGroup dihedral8() { return closure(4, {{1, 2, 3, 0}, {3, 2, 1, 0}}); }

}  // namespace arbocoh::oracle

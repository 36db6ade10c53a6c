#pragma once

#include <cstdint>
#include <vector>

namespace dgk {

/// Subsets of {0..s-1} as bitmasks. The canonical order is by size, then
/// lexicographic on sorted index lists: {0,1} < {0,2} < {1,2}.
using Subset = std::uint32_t;

inline int subset_size(Subset s) { return __builtin_popcount(s); }

/// Canonical-order comparison.
inline bool subset_less(Subset a, Subset b) {
  int sa = subset_size(a), sb = subset_size(b);
  if (sa != sb) return sa < sb;
  Subset diff = a ^ b;
  if (diff == 0) return false;
  return (a & diff & (~diff + 1)) != 0;
}

/// All k-subsets of an s-set in canonical order.
std::vector<Subset> subsets_of_size(unsigned s, unsigned k);

/// Sign of e_a ^ e_b relative to e_{a|b}: (-1)^{#{(i,j) : i in a, j in b, i > j}}.
/// Zero when a and b intersect.
int wedge_sign(Subset a, Subset b);

/// Position of index i among the elements of s (0-based), i must be in s.
inline int position_in(Subset s, unsigned i) { return __builtin_popcount(s & ((Subset{1} << i) - 1)); }

}  // namespace dgk

#include "dgk/subsets.hpp"

#include <algorithm>

namespace dgk {

std::vector<Subset> subsets_of_size(unsigned s, unsigned k) {
  std::vector<Subset> out;
  if (k > s) return out;
  std::vector<unsigned> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Subset m = 0;
    for (auto i : idx) m |= Subset{1} << i;
    out.push_back(m);
    int p = static_cast<int>(k) - 1;
    while (p >= 0 && idx[static_cast<unsigned>(p)] == s - k + static_cast<unsigned>(p)) --p;
    if (p < 0) break;
    ++idx[static_cast<unsigned>(p)];
    for (unsigned q = static_cast<unsigned>(p) + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

int wedge_sign(Subset a, Subset b) {
  if (a & b) return 0;
  int inversions = 0;
  for (Subset rest = b; rest; rest &= rest - 1) {
    unsigned j = static_cast<unsigned>(__builtin_ctz(rest));
    inversions += __builtin_popcount(a >> j >> 1);  // elements of a above j
  }
  return (inversions & 1) ? -1 : 1;
}

}  // namespace dgk

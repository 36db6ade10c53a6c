#pragma once

// Brute-force reference computations. They share only data types with the
// library; every decision is made by direct enumeration.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dgk/complex.hpp"
#include "dgk/polynomial.hpp"

namespace dgk::oracle {

/// f lies in (x_i : i in mask) iff every term involves one of those variables.
inline bool in_prime(const Polynomial& f, std::uint64_t mask) {
  for (const auto& t : f.terms()) {
    bool hit = false;
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if ((mask >> i & 1) && t.mono[i] > 0) hit = true;
    if (!hit) return false;
  }
  return true;
}

inline bool prime_contains(std::uint64_t mask, const std::vector<Polynomial>& gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return in_prime(g, mask); });
}

/// Every monomial prime of k[x_1..x_n] containing the generators.
inline std::vector<std::uint64_t> primes_containing(std::size_t n, const std::vector<Polynomial>& gens) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    if (prime_contains(m, gens)) out.push_back(m);
  return out;
}

/// Minimal elements under inclusion.
inline std::vector<std::uint64_t> minimal_masks(const std::vector<std::uint64_t>& masks) {
  std::vector<std::uint64_t> out;
  for (auto m : masks) {
    bool minimal = std::none_of(masks.begin(), masks.end(), [&](std::uint64_t o) { return o != m && (o & ~m) == 0; });
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Largest variable set containing no leading monomial's support.
inline long independent_set_dim(std::size_t n, const std::vector<Monomial>& leads) {
  long best = -1;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    bool ok = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return (l.support() & ~m) == 0; });
    if (ok) best = std::max<long>(best, __builtin_popcountll(m));
  }
  return best;
}

/// Longest strictly increasing chain (number of steps) in a family of masks.
inline long longest_chain(std::vector<std::uint64_t> masks) {
  if (masks.empty()) return -1;
  std::sort(masks.begin(), masks.end(),
            [](auto a, auto b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });
  std::vector<long> len(masks.size(), 0);
  long best = 0;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (masks[j] != masks[i] && (masks[j] & ~masks[i]) == 0) len[i] = std::max(len[i], len[j] + 1);
    best = std::max(best, len[i]);
  }
  return best;
}

/// sup over all monomial primes p of (n - |p|) - inf(X_p), with inf(X_p) the
/// least i whose Fitting ideal lies in p. -inf when no prime sees homology.
inline ExtInt prime_supremum_dim(const HomologyTable& h) {
  const std::size_t n = h.ring()->nvars();
  ExtInt best = ExtInt::neg_inf();
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    for (const auto& e : h.entries()) {
      if (e.is_zero()) continue;
      if (prime_contains(m, e.fitting.generators())) {
        long d = static_cast<long>(n) - __builtin_popcountll(m) - e.degree;
        best = max(best, ExtInt(d));
        break;
      }
    }
  }
  return best;
}

/// Coefficient of e_T in d(e_S), by the j-indexed sign formula on 1-based
/// positions: d(e_{i_1<..<i_k}) = sum_j (-1)^{j+1} x_{i_j} e_{S - i_j}.
inline int koszul_sign(std::uint32_t s, std::uint32_t t) {
  if ((t & ~s) != 0 || __builtin_popcount(s) != __builtin_popcount(t) + 1) return 0;
  std::uint32_t removed = s & ~t;
  int j = 0;
  for (std::uint32_t bit = 1; bit <= s; bit <<= 1)
    if (s & bit) {
      ++j;
      if (bit == removed) return (j % 2 == 1) ? 1 : -1;
    }
  return 0;
}

/// 2x2 determinant.
inline Polynomial det2(const Polynomial& a, const Polynomial& b, const Polynomial& c, const Polynomial& d) {
  return a * d - b * c;
}

}  // namespace dgk::oracle

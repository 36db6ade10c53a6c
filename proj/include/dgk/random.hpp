#pragma once

#include <cstdint>

#include "dgk/polynomial.hpp"

namespace dgk {

/// splitmix64 step; identical output on every platform for a given state.
inline std::uint64_t next_random(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Uniform-ish integer in [0, n); n > 0.
inline std::uint64_t random_below(std::uint64_t& state, std::uint64_t n) { return next_random(state) % n; }

/// Random integer in [lo, hi].
inline long long random_between(std::uint64_t& state, long long lo, long long hi) {
  return lo + static_cast<long long>(random_below(state, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Up to `terms` terms of total degree at most `max_degree`, coefficients in
/// [-3, 3].
Polynomial random_polynomial(const RingPtr& ring, std::uint64_t& state, unsigned terms, unsigned max_degree);

/// Random nonzero linear form with coefficients in [-3, 3].
Polynomial random_linear_form(const RingPtr& ring, std::uint64_t& state);

}  // namespace dgk

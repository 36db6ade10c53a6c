#pragma once

#include <string>
#include <vector>

#include "dgk/polynomial.hpp"

namespace dgk::test {

inline RingPtr ring(std::vector<std::string> vars, Field f = Field::rationals()) {
  return make_ring(std::move(vars), std::move(f));
}

inline Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

inline std::vector<Polynomial> Ps(const RingPtr& r, const std::vector<std::string>& s) {
  std::vector<Polynomial> out;
  for (const auto& t : s) out.push_back(parse_polynomial(r, t));
  return out;
}

}  // namespace dgk::test

#include "dgk/complex.hpp"

namespace dgk::test {

/// 0 -> R --0--> k -> 0 over k[T], k = R/(T), modelled by the free complex
/// R^2 --[0 T]--> R in degrees 1, 0. H_1 = R, H_0 = k.
inline FreeComplex free_line_over_residue_field(const RingPtr& r) {
  PolyMatrix d(r, 1, 2);
  d.at(0, 1) = Polynomial::variable(r, 0);
  return FreeComplex(r, 0, {1, 2}, {d});
}

inline PolyMatrix matrix(const RingPtr& r, std::size_t rows, std::size_t cols, const std::vector<std::string>& entries) {
  PolyMatrix m(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = parse_polynomial(r, entries.at(i * cols + j));
  return m;
}

}  // namespace dgk::test

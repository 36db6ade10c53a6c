#include "dgk/random.hpp"

namespace dgk {

Polynomial random_polynomial(const RingPtr& ring, std::uint64_t& state, unsigned terms, unsigned max_degree) {
  std::vector<Term> out;
  const std::size_t n = ring->nvars();
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m(n);
    if (n > 0) {
      auto d = random_below(state, max_degree + 1);
      for (std::uint64_t k = 0; k < d; ++k) ++m[random_below(state, n)];
    }
    out.push_back({ring->field().from_int(random_between(state, -3, 3)), std::move(m)});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

Polynomial random_linear_form(const RingPtr& ring, std::uint64_t& state) {
  while (true) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      out.push_back({ring->field().from_int(random_between(state, -3, 3)), Monomial::variable(ring->nvars(), i)});
    Polynomial p = Polynomial::from_terms(ring, std::move(out));
    if (!p.is_zero() || ring->nvars() == 0) return p;
  }
}

}  // namespace dgk

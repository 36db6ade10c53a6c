#include <doctest.h>

#include "dgk/dimension.hpp"
#include "dgk/errors.hpp"
#include "dgk/koszul.hpp"
#include "dgk/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace dgk;
using dgk::test::P;
using dgk::test::Ps;

namespace {

KoszulPtr koszul(const RingPtr& r, const std::vector<std::string>& seq) { return make_koszul(r, Ps(r, seq)); }
FreeComplex koszul_complex(const RingPtr& r, const std::vector<std::string>& seq) {
  return to_free_complex(*koszul(r, seq));
}

std::vector<std::string> variables(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

Polynomial random_monomial(const RingPtr& r, std::uint64_t& s) {
  const std::size_t n = r->nvars();
  Monomial m(n);
  unsigned deg = 1 + static_cast<unsigned>(random_below(s, 2));
  for (unsigned k = 0; k < deg; ++k) m[random_below(s, n)] += 1;
  return Polynomial::monomial(r, 1, m);
}

// Koszul complex on 1..3 random monomials, optionally shifted.
FreeComplex random_monomial_complex(const RingPtr& r, std::uint64_t& s) {
  std::vector<Polynomial> seq;
  std::size_t len = 1 + random_below(s, 3);
  for (std::size_t k = 0; k < len; ++k) seq.push_back(random_monomial(r, s));
  FreeComplex x = to_free_complex(*make_koszul(r, seq));
  return x.shifted(static_cast<int>(random_below(s, 3)) - 1);
}

MonomialPrime mask(std::uint64_t m) { return {m}; }

// R --1--> R
FreeComplex exact_complex(const RingPtr& r) { return FreeComplex(r, 0, {1, 1}, {test::matrix(r, 1, 1, {"1"})}); }

}  // namespace

TEST_CASE("monomial radical primes") {
  auto r = test::ring({"x", "y", "z"});
  auto primes = [&](const std::vector<std::string>& g) { return monomial_radical_primes({r, Ps(r, g)}); };
  CHECK(primes({"x^2", "x*y"}) == std::vector<MonomialPrime>{mask(1)});
  CHECK(primes({"x*y", "z"}) == std::vector<MonomialPrime>{mask(0b101), mask(0b110)});
  CHECK(primes({"x^2+x*y", "y^2"}) == std::vector<MonomialPrime>{mask(0b011)});
  CHECK(primes({"1"})->empty());
  CHECK(primes({}) == std::vector<MonomialPrime>{mask(0)});
  CHECK_FALSE(primes({"x^2-y^2"}).has_value());
  CHECK_FALSE(primes({"x^2+y^2"}).has_value());
  CHECK_FALSE(primes({"x-1"}).has_value());
}

TEST_CASE("monomial radical primes agree with enumeration") {
  std::uint64_t s = 11;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto r = test::ring(variables(n));
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Polynomial> g;
      std::size_t len = 1 + random_below(s, 3);
      for (std::size_t k = 0; k < len; ++k) g.push_back(random_monomial(r, s));
      // a non-monomial generator with monomial radical: (m1 + m2) next to m1^2  and m2
      Polynomial a = random_monomial(r, s), b = random_monomial(r, s);
      if (a != b) {
        g.push_back(a + b);
        g.push_back(b * b);
      }
      auto got = monomial_radical_primes({r, g});
      REQUIRE(got.has_value());
      std::vector<std::uint64_t> masks;
      for (const auto& p : *got) masks.push_back(p.mask);
      std::sort(masks.begin(), masks.end());
      CHECK(masks == oracle::minimal_masks(oracle::primes_containing(n, g)));
    }
  }
}

TEST_CASE("free line over the residue field") {
  auto r = test::ring({"T"});
  ComplexAnalysis x(test::free_line_over_residue_field(r));
  CHECK(x.inf() == ExtInt(0));
  CHECK(foxby_dim(x) == ExtInt(0));
  CHECK(x.support_is_everything());
  const MonomialPrime zero{0}, m{1};
  CHECK(inf_at_prime(x, m) == ExtInt(0));
  CHECK(inf_at_prime(x, zero) == ExtInt(1));
  CHECK(dim_at_prime(x, m) == ExtInt(0));
  CHECK(dim_at_prime(x, zero) == ExtInt(-1));
  CHECK(is_anchor_prime(x, m));
  CHECK(is_anchor_prime(x, zero));

  CHECK(is_length_sequence(x.complex(), Ps(r, {"T"})));
  CHECK_FALSE(is_length_sequence(x.complex(), {}));
  CHECK_THROWS_AS(is_length_sequence(x.complex(), Ps(r, {"T+1"})), PreconditionError);

  DimensionReport d = ldim(x, default_pool(r, 0, 0), 3);
  CHECK(d.ldim_lower == ExtInt(1));
  CHECK(d.ldim_upper == ExtInt(1));
  CHECK(d.verdict == DimVerdict::Exact);
  CHECK(d.witness == Ps(r, {"T"}));
  CHECK(d.witness_from_pool);

  // anchored but not a length sequence: the two sop notions differ here
  ChristensenCheck c = is_sop_christensen(x.complex(), {});
  CHECK(c.holds());
}

TEST_CASE("localized invariants away from support") {
  auto r = test::ring({"x", "y"});
  ComplexAnalysis x(koszul_complex(r, {"x"}));
  const MonomialPrime py{0b10};
  CHECK(inf_at_prime(x, py) == ExtInt::pos_inf());
  CHECK(dim_at_prime(x, py) == ExtInt::neg_inf());
  CHECK_FALSE(is_anchor_prime(x, py));
}

TEST_CASE("foxby dimension examples") {
  auto r = test::ring({"x", "y"});
  CHECK(foxby_dim(koszul_complex(r, {"x", "y"})) == ExtInt(0));
  CHECK(foxby_dim(koszul_complex(r, {"x"})) == ExtInt(1));
  CHECK(foxby_dim(koszul_complex(r, {"x*y"})) == ExtInt(1));
  CHECK(foxby_dim(koszul_complex(r, {"x", "x"})) == ExtInt(1));
  CHECK(foxby_dim(koszul_complex(r, {}).shifted(2)) == ExtInt(0));
  CHECK(foxby_dim(exact_complex(r)) == ExtInt::neg_inf());
  // module in degree 0: usual Krull dimension
  ModulePresentation m = ModulePresentation::cyclic({r, Ps(r, {"x^2", "x*y"})});
  FreeComplex pres(r, 0, {1, 2}, {m.relations()});
  CHECK(foxby_dim(pres) == module_dim(m));
}

TEST_CASE("per-degree dimension equals the prime supremum") {
  std::uint64_t s = 5;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto r = test::ring(variables(n));
    for (int trial = 0; trial < 12; ++trial) {
      ComplexAnalysis x(random_monomial_complex(r, s));
      CHECK(foxby_dim(x) == oracle::prime_supremum_dim(x.homology()));
      REQUIRE(x.has_monomial_fitting_data());
      // dim X = sup_p dim X_p, and both localized invariants agree with the
      // oracle on every prime
      ExtInt local_sup = ExtInt::neg_inf();
      for (std::uint64_t p = 0; p < (std::uint64_t{1} << n); ++p) {
        ExtInt inf_p = inf_at_prime(x, mask(p));
        ExtInt expect = ExtInt::pos_inf();
        for (const auto& e : x.homology().entries())
          if (!e.is_zero() && oracle::prime_contains(p, e.fitting.generators())) {
            expect = ExtInt(e.degree);
            break;
          }
        CHECK(inf_p == expect);
        ExtInt d = dim_at_prime(x, mask(p));
        CHECK(d >= -inf_p);  // dim X_p >= -inf X_p
        local_sup = max(local_sup, d);
      }
      CHECK(local_sup == foxby_dim(x));
    }
  }
}

TEST_CASE("finite-length homology makes the maximal ideal an anchor") {
  std::uint64_t s = 8;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto r = test::ring(variables(n));
    const MonomialPrime m = MonomialPrime::maximal(n);
    for (int trial = 0; trial < 10; ++trial) {
      FreeComplex x = random_monomial_complex(r, s);
      FreeComplex t = tensor_with_koszul(x, default_pool(r, 0, 0));
      ComplexAnalysis a(t);
      if (!a.inf().is_finite()) continue;
      CHECK(is_anchor_prime(a, m));
    }
  }
  // the converse fails
  auto r = test::ring({"T"});
  ComplexAnalysis line(test::free_line_over_residue_field(r));
  CHECK(is_anchor_prime(line, MonomialPrime::maximal(1)));
  CHECK_FALSE(is_length_sequence(line.complex(), {}));
}

TEST_CASE("non-monomial Fitting data") {
  auto r = test::ring({"x", "y"});
  ComplexAnalysis x(koszul_complex(r, {"x^2-y^2"}));
  CHECK_FALSE(x.has_monomial_fitting_data());
  const MonomialPrime m = MonomialPrime::maximal(2);
  // homogeneous: the global dimension applies at m
  CHECK(dim_at_prime(x, m) == ExtInt(1));
  CHECK(inf_at_prime(x, m) == ExtInt(0));
  CHECK_THROWS_AS(dim_at_prime(x, MonomialPrime{1}), UnsupportedInput);
  // finite length route
  ComplexAnalysis f(koszul_complex(r, {"x^2+y", "y^2"}));
  CHECK(is_anchor_prime(f, m));
  // neither homogeneous nor finite length
  ComplexAnalysis g(koszul_complex(r, {"x^2+y"}));
  if (!g.has_monomial_fitting_data()) CHECK_THROWS_AS(dim_at_prime(g, m), UnsupportedInput);
}

TEST_CASE("length sequences") {
  auto r = test::ring({"x", "y"});
  for (const auto& seq : std::vector<std::vector<std::string>>{{"x"}, {"x*y"}, {"x", "y"}, {}, {"x^2", "y^3"}}) {
    FreeComplex x = seq.empty() ? FreeComplex::concentrated(r, 0, 1) : koszul_complex(r, seq);
    CHECK(is_length_sequence(x, Ps(r, {"x", "y"})));
    CHECK(is_length_sequence(x, Ps(r, {"x+y", "x-y"})));
  }
  CHECK_FALSE(is_length_sequence(koszul_complex(r, {"x"}), Ps(r, {"x"})));
  CHECK(is_length_sequence(koszul_complex(r, {"x"}), Ps(r, {"y"})));
  CHECK(is_length_sequence(koszul_complex(r, {"x*y"}), Ps(r, {"x+y"})));
}

TEST_CASE("ldim examples") {
  auto r = test::ring({"x", "y"});
  DimensionReport d = ldim(ComplexAnalysis(koszul_complex(r, {"x"})), default_pool(r, 0, 0), 2);
  CHECK(d.verdict == DimVerdict::Exact);
  CHECK(d.ldim_upper == ExtInt(1));
  CHECK(d.witness == Ps(r, {"y"}));
  CHECK(d.candidates_tested == 3);

  // finite-length homology: ldim = -inf
  DimensionReport f = ldim(ComplexAnalysis(koszul_complex(r, {"x", "y"}).shifted(1)), default_pool(r, 0, 0), 2);
  CHECK(f.verdict == DimVerdict::Exact);
  CHECK(f.ldim_upper == ExtInt(-1));
  CHECK(f.witness.empty());

  // the pool cannot reach the shortest witness: bracketed, variables used
  auto r3 = test::ring({"x", "y", "z"});
  DimensionReport i = ldim(ComplexAnalysis(FreeComplex::concentrated(r3, 0, 1)), Ps(r3, {"x"}), 3);
  CHECK(i.ldim_upper == ExtInt(3));
  CHECK(i.ldim_lower == ExtInt(3));
  CHECK_FALSE(i.witness_from_pool);
  DimensionReport j = ldim(ComplexAnalysis(koszul_complex(r3, {"x*y"})), Ps(r3, {"x"}), 1);
  CHECK(j.ldim_lower == ExtInt(2));
  CHECK(j.ldim_upper == ExtInt(3));
  CHECK(j.verdict == DimVerdict::Interval);

  CHECK_THROWS_AS(ldim(ComplexAnalysis(exact_complex(r)), default_pool(r, 0, 0), 2), PreconditionError);
}

TEST_CASE("ldim bounds on random complexes") {
  std::uint64_t s = 21;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto r = test::ring(variables(n));
    const MonomialPrime m = MonomialPrime::maximal(n);
    for (int trial = 0; trial < 10; ++trial) {
      ComplexAnalysis x(random_monomial_complex(r, s));
      if (!x.inf().is_finite()) continue;
      DimensionReport d = ldim(x, default_pool(r, 2, s), n);
      CHECK(d.ldim_lower <= d.ldim_upper);
      CHECK(d.ldim_upper >= foxby_dim(x));
      CHECK(ExtInt(static_cast<long long>(n)) >= d.ldim_upper + d.inf.value());
      CHECK((d.verdict == DimVerdict::Exact) == (d.ldim_lower == d.ldim_upper));
      REQUIRE(is_length_sequence(x.complex(), d.witness));
      CHECK(ExtInt(static_cast<long long>(d.witness.size())) == d.ldim_upper + d.inf.value());
      // the witness tensor is anchored at m
      CHECK(is_anchor_prime(ComplexAnalysis(tensor_with_koszul(x.complex(), d.witness)), m));
    }
  }
}

TEST_CASE("module systems of parameters") {
  auto r = test::ring({"x", "y"});
  ModulePresentation m = ModulePresentation::cyclic({r, Ps(r, {"x"})});
  CHECK(is_sop_module(m, Ps(r, {"y"})).holds());
  ModuleSopCheck bad = is_sop_module(m, Ps(r, {"x"}));
  CHECK_FALSE(bad.holds());
  CHECK(bad.quotient_dim == ExtInt(1));
  ModulePresentation fin = ModulePresentation::cyclic({r, Ps(r, {"x^2", "y"})});
  CHECK(is_sop_module(fin, {}).holds());
  CHECK_FALSE(is_sop_module(fin, Ps(r, {"x"})).holds());
}

TEST_CASE("Christensen systems of parameters") {
  auto r = test::ring({"x", "y"});
  FreeComplex x = koszul_complex(r, {"x"});
  CHECK(is_sop_christensen(x, Ps(r, {"y"})).holds());
  ChristensenCheck c = is_sop_christensen(x, Ps(r, {"x"}));
  CHECK(c.length_matches);
  CHECK_FALSE(c.anchor);
  CHECK_FALSE(is_sop_christensen(x, Ps(r, {"x", "y"})).length_matches);
}

TEST_CASE("H_0 of the tensor") {
  auto r = test::ring({"x", "y"});
  CHECK(h0_iso_check(*koszul(r, {"x"}), Ps(r, {"y"})));
  CHECK(h0_iso_check(*koszul(r, {"x"}), {}));
  CHECK(h0_iso_check(*koszul(r, {"x*y"}), Ps(r, {"x+y"})));
  CHECK(h0_iso_check(*koszul(r, {"x*y", "y^2"}), Ps(r, {"x-y"})));
}

TEST_CASE("theorem examples") {
  auto r = test::ring({"x", "y"});
  auto pool = default_pool(r, 0, 0);
  TheoremReport t = verify_theorem(koszul(r, {"x"}), Ps(r, {"y"}), pool, 2);
  CHECK(t.passed());
  CHECK(t.certificate.christensen.holds());
  CHECK(t.certificate.h0.holds());
  CHECK(t.certificate.length_sop == std::optional<bool>(true));
  CHECK(t.dgdim == ExtInt(1));
  CHECK(t.foxby == ExtInt(1));
  CHECK(t.dim_h0 == ExtInt(1));
  CHECK(t.ldim.ldim_upper == ExtInt(1));

  TheoremReport z = verify_theorem(koszul(r, {"x", "y"}), {}, pool, 2);
  CHECK(z.passed());
  CHECK(z.certificate.length_sop == std::optional<bool>(true));
  CHECK(z.dim_h0 == ExtInt(0));

  TheoremReport f = verify_theorem(koszul(r, {"x"}), Ps(r, {"x"}), pool, 2);
  CHECK(f.passed());
  CHECK_FALSE(f.certificate.christensen.holds());
  CHECK_FALSE(f.certificate.h0.holds());
  CHECK(f.certificate.length_sop == std::optional<bool>(false));
}

TEST_CASE("theorem on random Koszul algebras") {
  std::uint64_t s = 99;
  int checked = 0;
  for (std::size_t n = 2; n <= 3; ++n) {
    auto r = test::ring(variables(n));
    auto pool = default_pool(r, 2, s);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Polynomial> seq;
      std::size_t len = 1 + random_below(s, 2);
      for (std::size_t k = 0; k < len; ++k) seq.push_back(random_monomial(r, s));
      auto a = make_koszul(r, seq);
      DimensionReport d = ldim(ComplexAnalysis(to_free_complex(*a)), pool, n);
      for (int c = 0; c < 3; ++c) {
        std::vector<Polynomial> cand;
        std::size_t clen = random_below(s, n + 1);
        for (std::size_t k = 0; k < clen; ++k) cand.push_back(pool[random_below(s, pool.size())]);
        TheoremReport t = verify_theorem(a, cand, d);
        CHECK_MESSAGE(t.passed(), (t.discrepancies.empty() ? std::string("inconclusive") : t.discrepancies.front()));
        ++checked;
      }
    }
  }
  CHECK(checked == 24);
}

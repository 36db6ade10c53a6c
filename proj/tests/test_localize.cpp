#include <doctest.h>

#include "dgk/dg_localize.hpp"
#include "dgk/errors.hpp"
#include "support.hpp"

using namespace dgk;
using dgk::test::P;
using dgk::test::Ps;

namespace {

struct Setup {
  RingPtr r = test::ring({"x", "y"});
  KoszulPtr a = make_koszul(r, Ps(r, {"x", "y"}));
  KoszulElement e1 = KoszulElement::basis(a, 0b01);
  KoszulElement e2 = KoszulElement::basis(a, 0b10);
  KoszulElement e12 = KoszulElement::basis(a, 0b11);
  KoszulElement one = KoszulElement::one(a);
  KoszulElement s(const std::string& f) const { return KoszulElement::scalar(a, P(r, f)); }
  MultiplicativeSet unit_plus_x() const { return MultiplicativeSet(a, {s("1 + x")}); }
};

}  // namespace

TEST_CASE("multiplicative sets") {
  Setup t;
  auto u = t.unit_plus_x();
  CHECK(u.generators().size() == 2);
  CHECK(u.in_degree_zero());
  CHECK_FALSE(u.has_odd_generator());
  CHECK(u.closure().size() == 5);  // (1+x)^0..4
  CHECK_THROWS_AS(MultiplicativeSet(t.a, {t.e1 + t.one}), StructuralError);
  CHECK_THROWS_AS(MultiplicativeSet(t.a, {KoszulElement(t.a)}), StructuralError);
  MultiplicativeSet odd(t.a, {t.e1});
  CHECK(std::any_of(odd.closure().begin(), odd.closure().end(), [](const KoszulElement& c) { return c.is_zero(); }));
}

TEST_CASE("equivalence of fractions") {
  Setup t;
  auto u = t.unit_plus_x();
  Fraction f = Fraction::make(t.e1, t.s("1 + x"));
  auto r = loc_equiv(f, f, u);
  CHECK(r.verdict == Verdict::Yes);
  REQUIRE(r.witness);
  CHECK(*r.witness == t.one);

  // odd denominator: reflexivity needs w = u
  MultiplicativeSet odd(t.a, {t.e1});
  Fraction g = Fraction::make(t.e2, t.e1);
  auto ro = loc_equiv(g, g, odd);
  CHECK(ro.verdict == Verdict::Yes);
  REQUIRE(ro.witness);
  CHECK_FALSE(*ro.witness == t.one);

  auto k1 = make_koszul(test::ring({"x"}), Ps(test::ring({"x"}), {"x"}));
  MultiplicativeSet trivial(k1, {});
  auto xe = KoszulElement::basis(k1, 1) * P(k1->ring(), "x");
  CHECK(loc_equiv(Fraction::make(xe, KoszulElement::one(k1)), Fraction::make(xe, KoszulElement::one(k1)), trivial)
            .verdict == Verdict::Yes);

  CHECK(loc_equiv(Fraction::make(t.e1, t.one), Fraction::make(t.e2, t.one), u).verdict == Verdict::No);
  CHECK(loc_equiv(Fraction::make(t.e1, t.one), Fraction::zero(t.a, 0), u).verdict == Verdict::No);
  // e_12 squares to 0, so U = {1, e_12, 0, ...} identifies everything
  MultiplicativeSet top(t.a, {t.e12});
  CHECK(loc_equiv(Fraction::make(t.e1, t.one), Fraction::make(t.e2, t.one), top).verdict == Verdict::Yes);
  // with words of length 1 the zero product is out of reach
  MultiplicativeSet short_words(t.a, {t.e12}, 1);
  CHECK(loc_equiv(Fraction::make(t.one, t.one), Fraction::make(t.s("x"), t.one), short_words).verdict ==
        Verdict::Unknown);
}

TEST_CASE("scaled representatives are equivalent") {
  Setup t;
  auto u = t.unit_plus_x();
  Fraction f = Fraction::make(t.e1 * P(t.r, "y"), t.s("1 + x"));
  auto w = t.s("(1 + x)^2");
  Fraction g{wedge(w, f.num), wedge(w, f.den), f.num_deg, f.den_deg};
  CHECK(loc_equiv(f, g, u).verdict == Verdict::Yes);
}

TEST_CASE("quotient-rule differential") {
  Setup t;
  auto u = t.unit_plus_x();
  Fraction m = Fraction::make(t.e12 * P(t.r, "x"), t.one);
  Fraction dm = loc_differential(m);
  CHECK(loc_equiv(dm, Fraction::make(koszul_differential(m.num), t.one), u).verdict == Verdict::Yes);

  Fraction f = Fraction::make(t.e1, t.s("1 + x"));
  Fraction df = loc_differential(f);
  CHECK(df.degree() == 0);
  CHECK(loc_equiv(df, Fraction::make(t.s("x"), t.s("1 + x")), u).verdict == Verdict::Yes);

  Fraction h = Fraction::make(t.e12, t.s("1 + x"));
  Fraction ddh = loc_differential(loc_differential(h));
  CHECK(loc_equiv(ddh, Fraction::zero(t.a, 0), u).verdict == Verdict::Yes);
}

TEST_CASE("sums and products") {
  Setup t;
  auto u = t.unit_plus_x();
  Fraction f = Fraction::make(t.e1 * P(t.r, "y"), t.s("1 + x"));
  CHECK(loc_equiv(loc_add(f, Fraction::zero(t.a, 1)), f, u).verdict == Verdict::Yes);
  Fraction neg{-f.num, f.den, f.num_deg, f.den_deg};
  CHECK(loc_equiv(loc_add(f, neg), Fraction::zero(t.a, 1), u).verdict == Verdict::Yes);
  Fraction sum = loc_add(Fraction::make(t.e1, t.one), Fraction::make(t.e2, t.one));
  CHECK(loc_equiv(sum, Fraction::make(t.e1 + t.e2, t.one), u).verdict == Verdict::Yes);
  CHECK_THROWS_AS(loc_add(f, Fraction::zero(t.a, 0)), PreconditionError);

  Fraction one = Fraction::make(t.one, t.one);
  CHECK(loc_equiv(loc_mul(one, f), f, u).verdict == Verdict::Yes);
  Fraction e1 = Fraction::make(t.e1, t.one);
  CHECK(loc_mul(e1, e1).num.is_zero());
  Fraction p = loc_mul(Fraction::make(t.s("x"), t.s("1 + x")), e1);
  CHECK(loc_equiv(p, Fraction::make(t.e1 * P(t.r, "x"), t.s("1 + x")), u).verdict == Verdict::Yes);
}

TEST_CASE("odd denominators collapse everything") {
  Setup t;
  MultiplicativeSet odd(t.a, {t.e1});
  CHECK(odd_denominator_collapse(odd));
  CHECK_FALSE(odd_denominator_collapse(MultiplicativeSet(t.a, {})));
  CHECK_FALSE(odd_denominator_collapse(t.unit_plus_x()));
  Fraction f = Fraction::make(t.e1, t.e1);
  CHECK(loc_equiv(f, Fraction::zero(t.a, 0), odd).verdict == Verdict::Yes);
  std::uint64_t s = 3;
  for (int n = 0; n < 100; ++n) {
    Fraction g = random_fraction(odd, s);
    CHECK(loc_equiv(g, Fraction::zero(t.a, g.degree()), odd).verdict == Verdict::Yes);
  }
}

TEST_CASE("degree-0 denominators keep degrees non-negative") {
  Setup t;
  auto u = t.unit_plus_x();
  CHECK(Fraction::make(t.e1, t.s("1 + x")).degree() == 1);
  CHECK(Fraction::make(t.s("y"), t.s("1 + x")).degree() == 0);
  std::uint64_t s = 5;
  for (int n = 0; n < 500; ++n) CHECK(random_fraction(u, s).degree() >= 0);
}

TEST_CASE("property suite") {
  Setup t;
  LocalizeOptions opt;
  opt.seed = 42;
  auto rep = localize_check(t.unit_plus_x(), opt);
  for (const auto& p : rep.properties) {
    INFO(p.name << ": " << p.counterexample);
    CHECK(p.passed());
    CHECK(p.trials > 0);
  }
  CHECK(rep.passed());
  auto names = std::vector<std::string>{};
  for (const auto& p : rep.properties) names.push_back(p.name);
  CHECK(std::find(names.begin(), names.end(), "positively_graded") != names.end());
  CHECK(std::find(names.begin(), names.end(), "odd_denominator_collapse") != names.end());
}

TEST_CASE("property suite over an odd set") {
  Setup t;
  LocalizeOptions opt;
  opt.fractions = 100;
  opt.pairs = 50;
  opt.leibniz = 50;
  opt.collapse = 50;
  opt.seed = 7;
  auto rep = localize_check(MultiplicativeSet(t.a, {t.e1, t.s("1 + y")}), opt);
  for (const auto& p : rep.properties) {
    INFO(p.name << ": " << p.counterexample);
    CHECK(p.passed());
  }
}

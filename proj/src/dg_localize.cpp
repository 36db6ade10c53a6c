#include "dgk/dg_localize.hpp"

#include <algorithm>

#include "dgk/errors.hpp"

namespace dgk {

MultiplicativeSet::MultiplicativeSet(KoszulPtr algebra, std::vector<KoszulElement> generators, unsigned word_bound)
    : alg_(std::move(algebra)), bound_(std::max(1u, word_bound)) {
  KoszulElement one = KoszulElement::one(alg_);
  gens_.push_back(one);
  for (auto& g : generators) {
    if (!g.algebra() || !(*g.algebra() == *alg_)) throw StructuralError("generator from a different algebra");
    if (g.is_zero()) throw StructuralError("0 cannot generate a multiplicative set");
    if (!g.degree()) throw StructuralError("generator " + g.to_string() + " is not homogeneous");
    if (std::none_of(gens_.begin(), gens_.end(), [&](const KoszulElement& h) { return h == g; }))
      gens_.push_back(std::move(g));
  }
  closure_.push_back(one);
  std::vector<KoszulElement> level = {one};
  for (unsigned len = 1; len <= bound_; ++len) {
    std::vector<KoszulElement> next;
    for (const auto& w : level)
      for (std::size_t k = 1; k < gens_.size(); ++k) {
        KoszulElement p = wedge(w, gens_[k]);
        if (std::none_of(closure_.begin(), closure_.end(), [&](const KoszulElement& c) { return c == p; })) {
          closure_.push_back(p);
          next.push_back(p);
        }
      }
    level = std::move(next);
  }
}

bool MultiplicativeSet::in_degree_zero() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const KoszulElement& g) { return g.degree() == 0; });
}

bool MultiplicativeSet::has_odd_generator() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const KoszulElement& g) { return *g.degree() % 2 != 0; });
}

std::string MultiplicativeSet::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < gens_.size(); ++k) s += (k ? ", " : "") + gens_[k].to_string();
  return s + "}";
}

// ---------------------------------------------------------------------------

Fraction Fraction::make(KoszulElement num, KoszulElement den) {
  if (num.is_zero()) throw StructuralError("zero numerator needs an explicit degree");
  auto dn = num.degree(), dd = den.degree();
  if (!dn || !dd) throw StructuralError("fractions need homogeneous numerator and denominator");
  return {std::move(num), std::move(den), *dn, *dd};
}

Fraction Fraction::zero(const KoszulPtr& algebra, int degree) {
  return {KoszulElement(algebra), KoszulElement::one(algebra), degree, 0};
}

std::string Fraction::to_string() const {
  return "(" + num.to_string() + ")/(" + den.to_string() + ") [deg " + std::to_string(degree()) + "]";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

KoszulElement signed_by(const KoszulElement& e, int exponent) { return (exponent & 1) ? -e : e; }

}  // namespace

EquivResult loc_equiv(const Fraction& a, const Fraction& b, const MultiplicativeSet& u) {
  if (a.degree() != b.degree()) return {Verdict::No, std::nullopt};
  KoszulElement cross = wedge(a.den, b.num) - signed_by(wedge(b.den, a.num), a.den_deg * b.den_deg);
  for (const auto& w : u.closure())
    if (wedge(w, cross).is_zero()) return {Verdict::Yes, w};
  // Nonzero elements of A_0 = R are nonzerodivisors on the free R-module A.
  if (u.in_degree_zero()) return {Verdict::No, std::nullopt};
  return {Verdict::Unknown, std::nullopt};
}

Fraction loc_differential(const Fraction& f) {
  KoszulElement num = wedge(f.den, koszul_differential(f.num)) - wedge(koszul_differential(f.den), f.num);
  return {std::move(num), wedge(f.den, f.den), f.num_deg + f.den_deg - 1, 2 * f.den_deg};
}

Fraction loc_add(const Fraction& a, const Fraction& b) {
  if (a.degree() != b.degree())
    throw PreconditionError("adding fractions of degrees " + std::to_string(a.degree()) + " and " +
                            std::to_string(b.degree()));
  KoszulElement num = wedge(a.den, b.num) + signed_by(wedge(b.den, a.num), a.den_deg * b.den_deg);
  return {std::move(num), wedge(a.den, b.den), a.den_deg + b.num_deg, a.den_deg + b.den_deg};
}

Fraction loc_mul(const Fraction& a, const Fraction& b) {
  return {wedge(a.num, b.num), wedge(a.den, b.den), a.num_deg + b.num_deg, a.den_deg + b.den_deg};
}

bool odd_denominator_collapse(const MultiplicativeSet& u) { return u.has_odd_generator(); }

Fraction random_fraction(const MultiplicativeSet& u, std::uint64_t& state) {
  const auto& alg = u.algebra();
  std::vector<const KoszulElement*> dens;
  for (const auto& c : u.closure())
    if (!c.is_zero()) dens.push_back(&c);
  const KoszulElement& den = *dens[random_below(state, dens.size())];
  unsigned k = static_cast<unsigned>(random_below(state, alg->length() + 1));
  KoszulElement num = random_element(alg, k, state);
  if (num.is_zero()) num = random_element(alg, k, state);
  return {num, den, static_cast<int>(k), *den.degree()};
}

bool LocalizeReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }

  void record(Verdict v, const std::function<std::string()>& detail) {
    ++r_.trials;
    if (v == Verdict::Yes) return;
    if (v == Verdict::Unknown) ++r_.unknown;
    else ++r_.failures;
    if (r_.counterexample.empty()) r_.counterexample = detail();
  }
  void record(bool ok, const std::function<std::string()>& detail) {
    record(ok ? Verdict::Yes : Verdict::No, detail);
  }
  PropertyResult take() { return std::move(r_); }

 private:
  PropertyResult r_;
};

// Nonzero closure element of even degree, for representative swaps.
const KoszulElement& random_even(const MultiplicativeSet& u, std::uint64_t& s) {
  std::vector<const KoszulElement*> even;
  for (const auto& c : u.closure())
    if (!c.is_zero() && *c.degree() % 2 == 0) even.push_back(&c);
  return *even[random_below(s, even.size())];
}

Fraction scaled_rep(const Fraction& f, const KoszulElement& w) {
  return {wedge(w, f.num), wedge(w, f.den), f.num_deg + *w.degree(), f.den_deg + *w.degree()};
}

// Random fraction of a prescribed degree, zero when no numerator degree fits.
Fraction random_fraction_of_degree(const MultiplicativeSet& u, int degree, std::uint64_t& s) {
  Fraction f = random_fraction(u, s);
  int k = degree + f.den_deg;
  if (k < 0 || k > static_cast<int>(u.algebra()->length())) return Fraction::zero(u.algebra(), degree);
  f.num = random_element(u.algebra(), static_cast<unsigned>(k), s);
  f.num_deg = k;
  return f;
}

}  // namespace

LocalizeReport localize_check(const MultiplicativeSet& u, const LocalizeOptions& o) {
  const auto& alg = u.algebra();
  std::uint64_t s = o.seed;
  LocalizeReport report;

  Tally refl("reflexive");
  for (std::size_t n = 0; n < o.pairs; ++n) {
    Fraction f = random_fraction(u, s);
    refl.record(loc_equiv(f, f, u).verdict, [&] { return f.to_string(); });
  }
  report.properties.push_back(refl.take());

  Tally dd("differential_squares_zero");
  for (std::size_t n = 0; n < o.fractions; ++n) {
    Fraction f = random_fraction(u, s);
    Fraction g = loc_differential(loc_differential(f));
    dd.record(loc_equiv(g, Fraction::zero(alg, g.degree()), u).verdict,
              [&] { return "f = " + f.to_string() + ", dd f = " + g.to_string(); });
  }
  report.properties.push_back(dd.take());

  Tally sym("symmetric"), trans("transitive"), wd("well_defined_differential"), wa("well_defined_addition"),
      wid("witness_derivative_identity");
  for (std::size_t n = 0; n < o.pairs; ++n) {
    Fraction f = random_fraction(u, s);
    const KoszulElement& w1 = random_even(u, s);
    const KoszulElement& w2 = random_even(u, s);
    Fraction g = scaled_rep(f, w1);
    Fraction h = scaled_rep(g, w2);
    auto fg = loc_equiv(f, g, u), gf = loc_equiv(g, f, u);
    auto show = [&] { return "m/u = " + f.to_string() + ", w = " + w1.to_string(); };
    sym.record(fg.verdict == Verdict::Yes && gf.verdict == Verdict::Yes ? Verdict::Yes
               : (fg.verdict == Verdict::No || gf.verdict == Verdict::No) ? Verdict::No
                                                                           : Verdict::Unknown,
               show);
    if (loc_equiv(g, h, u).verdict == Verdict::Yes && fg.verdict == Verdict::Yes)
      trans.record(loc_equiv(f, h, u).verdict, show);
    wd.record(loc_equiv(loc_differential(f), loc_differential(g), u).verdict, show);
    Fraction k = random_fraction_of_degree(u, f.degree(), s);
    wa.record(loc_equiv(loc_add(f, k), loc_add(g, k), u).verdict,
              [&] { return show() + ", summand " + k.to_string(); });
    if (fg.witness) {
      // w d(w) (v m - u n) = 0 for the witness w of m/u = n/v
      const KoszulElement& w = *fg.witness;
      KoszulElement diff = wedge(g.den, f.num) - wedge(f.den, g.num);
      wid.record(wedge(w, wedge(koszul_differential(w), diff)).is_zero(), show);
    }
  }
  report.properties.push_back(sym.take());
  report.properties.push_back(trans.take());
  report.properties.push_back(wd.take());
  report.properties.push_back(wa.take());
  report.properties.push_back(wid.take());

  Tally leib("leibniz");
  for (std::size_t n = 0; n < o.leibniz; ++n) {
    Fraction a = random_fraction(u, s), b = random_fraction(u, s);
    Fraction lhs = loc_differential(loc_mul(a, b));
    Fraction second = loc_mul(a, loc_differential(b));
    if (a.degree() & 1) second.num = -second.num;
    Fraction rhs = loc_add(loc_mul(loc_differential(a), b), second);
    leib.record(loc_equiv(lhs, rhs, u).verdict, [&] { return "a = " + a.to_string() + ", b = " + b.to_string(); });
  }
  report.properties.push_back(leib.take());

  if (u.in_degree_zero()) {
    Tally pos("positively_graded");
    for (std::size_t n = 0; n < o.positivity; ++n) {
      Fraction a = random_fraction(u, s), b = random_fraction(u, s);
      for (const Fraction& f : {a, loc_differential(a), loc_mul(a, b)})
        pos.record(f.degree() >= 0 || f.num.is_zero(), [&] { return f.to_string(); });
    }
    report.properties.push_back(pos.take());
  }

  Tally col("odd_denominator_collapse");
  if (alg->length() > 0 || u.has_odd_generator()) {
    std::vector<KoszulElement> gens(u.generators().begin() + 1, u.generators().end());
    if (!u.has_odd_generator()) gens.push_back(KoszulElement::basis(alg, 1));
    MultiplicativeSet odd(alg, gens, u.word_bound());
    col.record(odd_denominator_collapse(odd), [&] { return "no odd generator in " + odd.to_string(); });
    for (std::size_t n = 0; n < o.collapse; ++n) {
      Fraction f = random_fraction(odd, s);
      col.record(loc_equiv(f, Fraction::zero(alg, f.degree()), odd).verdict,
                 [&] { return f.to_string() + " over " + odd.to_string(); });
    }
  }
  report.properties.push_back(col.take());
  return report;
}

}  // namespace dgk

#include "dgk/koszul.hpp"

#include <algorithm>

#include "dgk/errors.hpp"

namespace dgk {

KoszulAlgebra::KoszulAlgebra(RingPtr ring, std::vector<Polynomial> sequence)
    : ring_(std::move(ring)), seq_(std::move(sequence)) {
  if (seq_.size() > 20) throw UnsupportedInput("Koszul sequences are limited to 20 elements");
  for (auto& f : seq_) {
    if (!f.ring()) f = Polynomial(ring_);
    if (!same_ring(f.ring(), ring_)) throw StructuralError("Koszul sequence element from a different ring");
    if (f.constant_term() != 0)
      throw PreconditionError("Koszul sequence element " + f.to_string() + " is not in the maximal ideal");
  }
  for (unsigned k = 0; k <= seq_.size(); ++k) basis_.push_back(subsets_of_size(length(), k));
}

std::size_t KoszulAlgebra::index_of(Subset s) const {
  const auto& v = basis_.at(static_cast<std::size_t>(subset_size(s)));
  auto it = std::lower_bound(v.begin(), v.end(), s, subset_less);
  if (it == v.end() || *it != s) throw StructuralError("subset outside the Koszul basis");
  return static_cast<std::size_t>(it - v.begin());
}

KoszulPtr make_koszul(RingPtr ring, std::vector<Polynomial> sequence) {
  return std::make_shared<const KoszulAlgebra>(std::move(ring), std::move(sequence));
}

// ---------------------------------------------------------------------------
// KoszulElement

KoszulElement KoszulElement::basis(KoszulPtr algebra, Subset s) {
  if (s >> algebra->length()) throw StructuralError("basis subset out of range");
  KoszulElement e(algebra);
  e.terms_.emplace(s, Polynomial::constant(algebra->ring(), 1));
  return e;
}

KoszulElement KoszulElement::scalar(KoszulPtr algebra, const Polynomial& c) {
  KoszulElement e(algebra);
  e.add_term(0, c);
  return e;
}

KoszulElement KoszulElement::one(KoszulPtr algebra) { return basis(std::move(algebra), 0); }

std::optional<int> KoszulElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = subset_size(terms_.begin()->first);
  for (const auto& [s, c] : terms_)
    if (subset_size(s) != d) return std::nullopt;
  return d;
}

Polynomial KoszulElement::coefficient(Subset s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Polynomial(alg_->ring()) : it->second;
}

void KoszulElement::require_same(const KoszulElement& o) const {
  if (alg_ != o.alg_ && !(alg_ && o.alg_ && *alg_ == *o.alg_))
    throw StructuralError("Koszul elements from different algebras");
}

void KoszulElement::add_term(Subset s, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(s, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

KoszulElement KoszulElement::operator+(const KoszulElement& o) const {
  require_same(o);
  KoszulElement r(*this);
  for (const auto& [s, c] : o.terms_) r.add_term(s, c);
  return r;
}

KoszulElement KoszulElement::operator-(const KoszulElement& o) const { return *this + (-o); }

KoszulElement KoszulElement::operator-() const {
  KoszulElement r(alg_);
  for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
  return r;
}

KoszulElement KoszulElement::operator*(const Polynomial& c) const {
  KoszulElement r(alg_);
  for (const auto& [s, v] : terms_) r.add_term(s, v * c);
  return r;
}

bool KoszulElement::operator==(const KoszulElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  for (auto b = o.terms_.begin(); b != o.terms_.end(); ++a, ++b)
    if (a->first != b->first || !(a->second == b->second)) return false;
  return true;
}

VectorPoly KoszulElement::coordinates(unsigned k) const {
  const auto& basis = alg_->basis(k);
  VectorPoly v(alg_->ring(), basis.size());
  for (const auto& [s, c] : terms_)
    if (static_cast<unsigned>(subset_size(s)) == k) v[alg_->index_of(s)] = c;
  return v;
}

KoszulElement KoszulElement::from_coordinates(KoszulPtr algebra, unsigned k, const VectorPoly& v) {
  const auto& basis = algebra->basis(k);
  if (v.rank() != basis.size()) throw StructuralError("coordinate vector has wrong length");
  KoszulElement e(algebra);
  for (std::size_t i = 0; i < basis.size(); ++i) e.add_term(basis[i], v[i]);
  return e;
}

std::string KoszulElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string name = "e{";
    bool first = true;
    for (unsigned i = 0; i < alg_->length(); ++i)
      if (s >> i & 1) {
        name += (first ? "" : ",") + std::to_string(i + 1);
        first = false;
      }
    name += "}";
    out += "(" + c.to_string() + ")*" + name;
  }
  return out;
}

KoszulElement wedge(const KoszulElement& a, const KoszulElement& b) {
  if (a.algebra() != b.algebra() && !(*a.algebra() == *b.algebra()))
    throw StructuralError("Koszul elements from different algebras");
  KoszulElement r(a.algebra());
  for (const auto& [s, c] : a.terms()) {
    for (const auto& [t, d] : b.terms()) {
      int sign = wedge_sign(s, t);
      if (sign == 0) continue;
      Polynomial p = c * d;
      r = r + KoszulElement::basis(a.algebra(), s | t) * (sign > 0 ? p : -p);
    }
  }
  return r;
}

KoszulElement koszul_differential(const KoszulElement& a) {
  const auto& alg = a.algebra();
  KoszulElement r(alg);
  for (const auto& [s, c] : a.terms()) {
    for (Subset rest = s; rest; rest &= rest - 1) {
      unsigned idx = static_cast<unsigned>(__builtin_ctz(rest));
      Polynomial coef = alg->sequence()[idx] * c;
      if (position_in(s, idx) & 1) coef = -coef;
      r = r + KoszulElement::basis(alg, s & ~(Subset{1} << idx)) * coef;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Axiom checks

bool AxiomReport::failed(const std::string& axiom) const {
  return std::any_of(failures.begin(), failures.end(), [&](const AxiomFailure& f) { return f.axiom == axiom; });
}

namespace {

class AxiomChecker {
 public:
  AxiomChecker(KoszulPtr alg, ProductFn product)
      : alg_(std::move(alg)), mul_(product ? std::move(product) : ProductFn(wedge)) {}

  void check(const std::string& axiom, bool ok, const std::function<std::string()>& detail) {
    ++report_.checks;
    if (ok || report_.failed(axiom)) {
      if (!ok) report_.passed = false;
      return;
    }
    report_.passed = false;
    report_.failures.push_back({axiom, detail()});
  }

  // Axioms involving a single pair (a, b), both homogeneous.
  void pair(const KoszulElement& a, const KoszulElement& b) {
    int da = a.degree().value_or(0), db = b.degree().value_or(0);
    KoszulElement ab = mul_(a, b), ba = mul_(b, a);
    KoszulElement one = KoszulElement::one(alg_);
    auto show = [&] { return "a = " + a.to_string() + ", b = " + b.to_string(); };
    check("unital", mul_(one, a) == a && mul_(a, one) == a, [&] { return "a = " + a.to_string(); });
    check("graded_commutative", (((da * db) & 1) ? -ab : ab) == ba, show);
    if (da & 1) check("odd_square_zero", mul_(a, a).is_zero(), [&] { return "a = " + a.to_string(); });
    KoszulElement lhs = koszul_differential(ab);
    KoszulElement rhs = mul_(koszul_differential(a), b) +
                        ((da & 1) ? -mul_(a, koszul_differential(b)) : mul_(a, koszul_differential(b)));
    check("leibniz", lhs == rhs, [&] {
      return show() + ": d(ab) = " + lhs.to_string() + " but d(a)b + (-1)^|a| a d(b) = " + rhs.to_string();
    });
    check("differential_squares_zero", koszul_differential(koszul_differential(a)).is_zero(),
          [&] { return "a = " + a.to_string(); });
  }

  void triple(const KoszulElement& a, const KoszulElement& b, const KoszulElement& c) {
    check("associative", mul_(mul_(a, b), c) == mul_(a, mul_(b, c)),
          [&] { return "a = " + a.to_string() + ", b = " + b.to_string() + ", c = " + c.to_string(); });
  }

  // a and b of equal degree.
  void distributive(const KoszulElement& a, const KoszulElement& b, const KoszulElement& c) {
    bool ok = mul_(a + b, c) == mul_(a, c) + mul_(b, c) && mul_(c, a + b) == mul_(c, a) + mul_(c, b);
    check("distributive", ok, [&] { return "a = " + a.to_string() + ", b = " + b.to_string() + ", c = " + c.to_string(); });
    if (a.degree().value_or(0) & 1)
      check("odd_square_zero", mul_(a + b, a + b).is_zero(), [&] { return "a + b = " + (a + b).to_string(); });
  }

  AxiomReport take() { return std::move(report_); }

 private:
  KoszulPtr alg_;
  ProductFn mul_;
  AxiomReport report_;
};

}  // namespace

KoszulElement random_element(const KoszulPtr& algebra, unsigned k, std::uint64_t& state) {
  KoszulElement e(algebra);
  for (Subset s : algebra->basis(k)) {
    if (random_below(state, 3) == 0) continue;
    e = e + KoszulElement::basis(algebra, s) * random_polynomial(algebra->ring(), state, 2, 2);
  }
  return e;
}

AxiomReport dg_axiom_check(const KoszulPtr& algebra, std::size_t sample_count, std::uint64_t seed,
                           const ProductFn& product) {
  if (sample_count == 0) throw PreconditionError("sample_count must be at least 1");
  AxiomChecker checker(algebra, product);
  std::uint64_t state = seed;
  const unsigned s = algebra->length();
  auto draw = [&](unsigned k) {
    // Zero samples test nothing; retry a few times.
    for (int attempt = 0; attempt < 8; ++attempt) {
      KoszulElement e = random_element(algebra, k, state);
      if (!e.is_zero()) return e;
    }
    return KoszulElement::basis(algebra, algebra->basis(k).front());
  };
  for (std::size_t n = 0; n < sample_count; ++n) {
    unsigned da = static_cast<unsigned>(random_below(state, s + 1));
    unsigned db = static_cast<unsigned>(random_below(state, s + 1));
    unsigned dc = static_cast<unsigned>(random_below(state, s + 1));
    KoszulElement a = draw(da), b = draw(db), c = draw(dc), a2 = draw(da);
    checker.pair(a, b);
    checker.triple(a, b, c);
    checker.distributive(a, a2, c);
  }
  return checker.take();
}

AxiomReport dg_axiom_check_exhaustive(const KoszulPtr& algebra, const ProductFn& product) {
  AxiomChecker checker(algebra, product);
  const Subset count = Subset{1} << algebra->length();
  std::vector<KoszulElement> basis;
  for (Subset s = 0; s < count; ++s) basis.push_back(KoszulElement::basis(algebra, s));
  for (const auto& a : basis)
    for (const auto& b : basis) {
      checker.pair(a, b);
      if (a.degree() == b.degree())
        for (const auto& c : basis) checker.distributive(a, b, c);
      for (const auto& c : basis) checker.triple(a, b, c);
    }
  return checker.take();
}

FreeComplex to_free_complex(const KoszulAlgebra& algebra) {
  const auto& ring = algebra.ring();
  const unsigned s = algebra.length();
  std::vector<std::size_t> ranks;
  for (unsigned k = 0; k <= s; ++k) ranks.push_back(algebra.basis(k).size());
  std::vector<PolyMatrix> diffs;
  for (unsigned k = 1; k <= s; ++k) {
    PolyMatrix d(ring, ranks[k - 1], ranks[k]);
    const auto& cols = algebra.basis(k);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      Subset sub = cols[c];
      for (Subset rest = sub; rest; rest &= rest - 1) {
        unsigned idx = static_cast<unsigned>(__builtin_ctz(rest));
        Polynomial coef = algebra.sequence()[idx];
        if (position_in(sub, idx) & 1) coef = -coef;
        d.at(algebra.index_of(sub & ~(Subset{1} << idx)), c) = coef;
      }
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(ring, 0, std::move(ranks), std::move(diffs));
}

}  // namespace dgk

#include "dgk/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dgk/errors.hpp"

namespace dgk {

PolyRing::PolyRing(std::vector<std::string> vars, Field field, MonomialOrder order)
    : vars_(std::move(vars)), field_(field), order_(std::move(order)) {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw StructuralError("empty variable name");
    if (!seen.insert(v).second) throw StructuralError("duplicate variable name '" + v + "'");
  }
  if (order_.kind() == MonomialOrder::Kind::Weight && order_.weights().size() != vars_.size())
    throw StructuralError("weight vector length does not match the variable count");
}

long PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<long>(i);
  return -1;
}

RingPtr make_ring(std::vector<std::string> vars, Field field, MonomialOrder order) {
  return std::make_shared<const PolyRing>(std::move(vars), field, std::move(order));
}

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
  Polynomial p(ring);
  FieldElement v = ring->field().from_rational(c);
  if (v != 0) p.terms_.push_back({v, Monomial(ring->nvars())});
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long long c) {
  return constant(ring, ring->field().from_int(c));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw StructuralError("variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({FieldElement(1), Monomial::variable(ring->nvars(), index)});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const FieldElement& c, Monomial m) {
  if (m.size() != ring->nvars()) throw StructuralError("monomial length does not match ring");
  Polynomial p(ring);
  FieldElement v = ring->field().from_rational(c);
  if (v != 0) p.terms_.push_back({v, std::move(m)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  const auto& field = ring->field();
  for (auto& t : terms) {
    if (t.mono.size() != ring->nvars()) throw StructuralError("monomial length does not match ring");
    t.coeff = field.from_rational(t.coeff);
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare_unchecked(a.mono, b.mono) > 0; });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = field.add(p.terms_.back().coeff, t.coeff);
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

FieldElement Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return FieldElement(0);
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

bool Polynomial::in_monomial_prime(std::uint64_t mask) const {
  return std::all_of(terms_.begin(), terms_.end(), [mask](const Term& t) { return (t.mono.support() & mask) != 0; });
}

void Polynomial::require_same_ring(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) throw StructuralError("polynomials belong to different rings");
}

namespace {

// a + sign*b on sorted term lists.
std::vector<Term> merge_terms(const PolyRing& ring, const std::vector<Term>& a, const std::vector<Term>& b,
                              bool subtract) {
  const auto& order = ring.order();
  const auto& field = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back({subtract ? field.neg(b[j].coeff) : b[j].coeff, b[j].mono});
      ++j;
      continue;
    }
    auto c = order.compare_unchecked(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({subtract ? field.neg(b[j].coeff) : b[j].coeff, b[j].mono});
      ++j;
    } else {
      FieldElement s = subtract ? field.sub(a[i].coeff, b[j].coeff) : field.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (!ring_) return o;
  if (!o.ring_) return *this;
  require_same_ring(o);
  Polynomial r(ring_);
  r.terms_ = merge_terms(*ring_, terms_, o.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (!o.ring_) return *this;
  if (!ring_) return -o;
  require_same_ring(o);
  Polynomial r(ring_);
  r.terms_ = merge_terms(*ring_, terms_, o.terms_, true);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({ring_->field().neg(t.coeff), t.mono});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (terms_.size() < o.terms_.size()) return o * *this;
  Polynomial acc(ring_);
  // Each row o_j * this is already sorted; fold rows in with merges.
  for (const auto& t : o.terms_) acc.terms_ = merge_terms(*ring_, acc.terms_, mul_term(t.coeff, t.mono).terms_, false);
  return acc;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial r(ring_);
  if (c == 0 || !ring_) return r;
  const auto& field = ring_->field();
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field.mul(t.coeff, c), t.mono});
  return r;
}

Polynomial Polynomial::mul_term(const FieldElement& c, const Monomial& m) const {
  Polynomial r(ring_);
  if (c == 0 || !ring_) return r;
  const auto& field = ring_->field();
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({field.mul(t.coeff, c), t.mono * m});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead_coeff()));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (terms_.empty()) return true;
  if (!same_ring(ring_, o.ring_)) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mono == o.terms_[i].mono)) return false;
  return true;
}

Polynomial Polynomial::map_to(RingPtr target, const std::vector<std::size_t>& var_map) const {
  if (var_map.size() != (ring_ ? ring_->nvars() : 0)) throw StructuralError("variable map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (var_map[i] >= target->nvars()) throw StructuralError("variable map out of range");
      m[var_map[i]] += t.mono[i];
    }
    out.push_back({t.coeff, std::move(m)});
  }
  return from_terms(std::move(target), std::move(out));
}

bool Polynomial::is_normalized() const {
  if (!ring_) return terms_.empty();
  const auto& order = ring_->order();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff == 0 || !ring_->field().is_normalized(terms_[i].coeff)) return false;
    if (terms_[i].mono.size() != ring_->nvars()) return false;
    if (i > 0 && order.compare_unchecked(terms_[i - 1].mono, terms_[i].mono) <= 0) return false;
  }
  return true;
}

std::string format_monomial(const PolyRing& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.variables()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& field = ring_->field();
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    bool negative = field.is_rational() && t.coeff < 0;
    FieldElement mag = negative ? FieldElement(-t.coeff) : t.coeff;
    if (i == 0) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    bool unit = (mag == 1);
    if (t.mono.is_one()) {
      s += field.format(mag);
    } else {
      if (!unit) s += field.format(mag) + "*";
      s += format_monomial(*ring_, t.mono);
    }
  }
  return s;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

}  // namespace dgk

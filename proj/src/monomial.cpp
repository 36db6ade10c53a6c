#include "dgk/monomial.hpp"

#include <algorithm>

#include "dgk/errors.hpp"

namespace dgk {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_[index] = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t e) { return e == 0; });
}

std::uint64_t Monomial::support() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size() && i < 64; ++i)
    if (exps_[i] > 0) mask |= (std::uint64_t{1} << i);
  return mask;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r(o);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], o.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && o.exps_[i] > 0) return false;
  return true;
}

MonomialOrder MonomialOrder::weight(std::vector<long long> weights) {
  for (auto w : weights)
    if (w < 0) throw StructuralError("weight orders need non-negative weights");
  return MonomialOrder(Kind::Weight, std::move(weights));
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Weight: {
      std::string s = "weight(";
      for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
      return s + ")";
    }
  }
  return "?";
}

namespace {

std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare_unchecked(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::Weight: {
      long long wa = 0, wb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        wa += weights_[i] * static_cast<long long>(a[i]);
        wb += weights_[i] * static_cast<long long>(b[i]);
      }
      if (wa != wb) return wa <=> wb;
      return grevlex_cmp(a, b);
    }
    case Kind::Grevlex:
    default:
      return grevlex_cmp(a, b);
  }
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw StructuralError("monomial length mismatch");
  if (kind_ == Kind::Weight && weights_.size() != a.size())
    throw StructuralError("weight vector length does not match monomial length");
  return compare_unchecked(a, b);
}

int monomial_cmp(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
  auto c = order.compare(a, b);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

}  // namespace dgk

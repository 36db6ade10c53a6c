#include "dgk/field.hpp"

#include <cctype>
#include <stdexcept>

#include "dgk/errors.hpp"

namespace dgk {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p > 0xFFFFFFFFull) throw StructuralError("field characteristic too large: " + std::to_string(p));
  if (!is_prime(p)) throw StructuralError("field characteristic is not prime: " + std::to_string(p));
  return Field(p);
}

Field Field::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "QQ" || t == "Q") return rationals();
  std::string digits;
  if (t.rfind("GF(", 0) == 0 && t.size() > 4 && t.back() == ')') {
    digits = t.substr(3, t.size() - 4);
  } else if (t.rfind("ZZ/", 0) == 0) {
    digits = t.substr(3);
  } else if (t.rfind("F_", 0) == 0) {
    digits = t.substr(2);
  } else {
    throw ParseError("unknown field '" + text + "'", 0);
  }
  if (digits.empty() || digits.size() > 10) throw ParseError("bad field characteristic in '" + text + "'", 0);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad field characteristic in '" + text + "'", 0);
  try {
    return prime(std::stoull(digits));
  } catch (const StructuralError& e) {
    throw ParseError(e.what(), 0);
  }
}

FieldElement Field::reduce(const mpz_class& z) const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pz_.get_mpz_t());
  return FieldElement(r);
}

FieldElement Field::from_int(long long v) const {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  if (p_ == 0) return FieldElement(z);
  return reduce(z);
}

FieldElement Field::from_rational(const mpq_class& q) const {
  mpq_class c(q);
  c.canonicalize();
  if (p_ == 0) return c;
  FieldElement num = reduce(c.get_num());
  FieldElement den = reduce(c.get_den());
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  return mul(num, inv(den));
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  if (p_ == 0) return a + b;
  mpz_class s = a.get_num() + b.get_num();
  if (s >= pz_) s -= pz_;
  return FieldElement(s);
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  if (p_ == 0) return a - b;
  mpz_class s = a.get_num() - b.get_num();
  if (s < 0) s += pz_;
  return FieldElement(s);
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  if (p_ == 0) return a * b;
  return reduce(a.get_num() * b.get_num());
}

FieldElement Field::neg(const FieldElement& a) const {
  if (p_ == 0) return -a;
  if (a == 0) return a;
  return FieldElement(pz_ - a.get_num());
}

FieldElement Field::inv(const FieldElement& a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), pz_.get_mpz_t());
  return FieldElement(r);
}

bool Field::is_normalized(const FieldElement& a) const {
  if (p_ == 0) {
    mpq_class c(a);
    c.canonicalize();
    return c == a && c.get_den() == a.get_den() && a.get_den() > 0;
  }
  return a.get_den() == 1 && a.get_num() >= 0 && a.get_num() < pz_;
}

std::string Field::name() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

std::string Field::format(const FieldElement& a) const {
  if (p_ != 0) return a.get_num().get_str();
  return a.get_str();
}

}  // namespace dgk

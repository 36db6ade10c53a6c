#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace dgk {

/// Field elements are stored as GMP rationals. Over Q they are kept in lowest
/// terms with positive denominator (gmpxx canonical form); over F_p they are
/// integers in [0, p).
using FieldElement = mpq_class;

/// Coefficient field descriptor: either Q or F_p for a prime p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws StructuralError if p is not prime.
  static Field prime(std::uint64_t p);
  /// Accepts "QQ", "Q", "GF(p)", "ZZ/p", "F_p". Throws ParseError.
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  FieldElement from_int(long long v) const;
  FieldElement from_rational(const mpq_class& q) const;
  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  /// Throws std::domain_error on zero.
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

  /// True iff `a` obeys the storage invariant for this field.
  bool is_normalized(const FieldElement& a) const;

  std::string name() const;
  std::string format(const FieldElement& a) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p), pz_(static_cast<unsigned long>(p)) {}
  FieldElement reduce(const mpz_class& z) const;

  std::uint64_t p_;
  mpz_class pz_;
};

}  // namespace dgk

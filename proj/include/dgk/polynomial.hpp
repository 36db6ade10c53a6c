#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dgk/field.hpp"
#include "dgk/monomial.hpp"

namespace dgk {

/// Polynomial ring k[x_1..x_n] with a fixed monomial order. The maximal ideal
/// of the graded-local convention is (x_1, ..., x_n).
class PolyRing {
 public:
  /// Throws StructuralError on duplicate or empty variable names, or a weight
  /// vector whose length differs from the variable count.
  PolyRing(std::vector<std::string> vars, Field field, MonomialOrder order = MonomialOrder::grevlex());

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  /// Index of a variable name, or -1.
  long index_of(std::string_view name) const;

  bool operator==(const PolyRing& o) const {
    return vars_ == o.vars_ && field_ == o.field_ && order_ == o.order_;
  }

 private:
  std::vector<std::string> vars_;
  Field field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> vars, Field field = Field::rationals(),
                  MonomialOrder order = MonomialOrder::grevlex());

/// Same ring by identity or by value.
inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

struct Term {
  FieldElement coeff;
  Monomial mono;
};

/// Sparse polynomial: terms strictly decreasing in the ring order, no zero
/// coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const FieldElement& c);
  static Polynomial constant(RingPtr ring, long long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const FieldElement& c, Monomial m);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Single term (with any coefficient).
  bool is_monomial() const { return terms_.size() == 1; }
  FieldElement constant_term() const;
  /// Precondition: nonzero.
  const Term& lead_term() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const FieldElement& lead_coeff() const { return terms_.front().coeff; }
  std::uint64_t total_degree() const;
  /// All terms of the same total degree (zero counts as homogeneous).
  bool is_homogeneous() const;
  /// Membership in the prime generated by the variables in `mask`: every term
  /// involves at least one of them.
  bool in_monomial_prime(std::uint64_t mask) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const FieldElement& c) const;
  Polynomial mul_term(const FieldElement& c, const Monomial& m) const;
  /// Divides by the leading coefficient. Zero stays zero.
  Polynomial monic() const;

  /// Same ring and same terms.
  bool operator==(const Polynomial& o) const;

  /// Re-express in `target`; variable i of this ring goes to var_map[i].
  Polynomial map_to(RingPtr target, const std::vector<std::size_t>& var_map) const;

  /// True iff the storage invariant holds (sorted, merged, normalized coeffs).
  bool is_normalized() const;

  std::string to_string() const;

 private:
  void require_same_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

/// Parses `3/2*x^2*y - z`, parentheses allowed. Throws ParseError on unknown
/// variables, malformed input or division by a non-constant.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

std::string format_monomial(const PolyRing& ring, const Monomial& m);

}  // namespace dgk

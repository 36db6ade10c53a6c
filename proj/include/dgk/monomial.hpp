#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <compare>
#include <span>
#include <vector>

namespace dgk {

/// Exponent vector of fixed length, one entry per ring variable.
class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::uint32_t, 8>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::span<const std::uint32_t> exps) : exps_(exps.begin(), exps.end()) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const Exponents& exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  /// Bitmask of variables with a positive exponent (first 64 variables).
  std::uint64_t support() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Requires divides(o): returns o / *this.
  Monomial quotient_of(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const = default;

 private:
  Exponents exps_;
};

/// Total monomial orders. Weight orders compare a non-negative weighted degree
/// first and break ties with grevlex.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { Grevlex, Lex, Weight };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  /// Throws StructuralError on negative weights.
  static MonomialOrder weight(std::vector<long long> weights);

  Kind kind() const { return kind_; }
  const std::vector<long long>& weights() const { return weights_; }
  std::string name() const;

  /// Throws StructuralError on length mismatch.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  /// compare() without the length check, for inner loops.
  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const;

  bool operator==(const MonomialOrder& o) const = default;

 private:
  MonomialOrder(Kind k, std::vector<long long> w) : kind_(k), weights_(std::move(w)) {}

  Kind kind_;
  std::vector<long long> weights_;
};

/// monomial_cmp: -1, 0, +1 for LT, EQ, GT.
int monomial_cmp(const MonomialOrder& order, const Monomial& a, const Monomial& b);

}  // namespace dgk

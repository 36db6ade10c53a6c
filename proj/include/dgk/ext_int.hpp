#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace dgk {

/// An integer extended by -inf and +inf. Used for infima of exact complexes
/// (+inf) and dimensions of zero modules (-inf).
class ExtInt {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr ExtInt() = default;
  constexpr ExtInt(long long v) : kind_(Kind::Finite), value_(v) {}  // NOLINT

  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr Kind kind() const { return kind_; }
  /// Only meaningful when finite.
  constexpr long long value() const { return value_; }

  constexpr bool operator==(const ExtInt& o) const {
    return kind_ == o.kind_ && (kind_ != Kind::Finite || value_ == o.value_);
  }
  constexpr std::strong_ordering operator<=>(const ExtInt& o) const {
    if (kind_ != o.kind_) return rank(kind_) <=> rank(o.kind_);
    if (kind_ != Kind::Finite) return std::strong_ordering::equal;
    return value_ <=> o.value_;
  }

  /// Addition with a finite offset; infinities absorb.
  constexpr ExtInt operator+(long long d) const {
    return is_finite() ? ExtInt(value_ + d) : *this;
  }
  constexpr ExtInt operator-(long long d) const { return *this + (-d); }
  constexpr ExtInt operator-() const {
    if (is_neg_inf()) return pos_inf();
    if (is_pos_inf()) return neg_inf();
    return ExtInt(-value_);
  }

  std::string to_string() const {
    if (is_neg_inf()) return "-inf";
    if (is_pos_inf()) return "+inf";
    return std::to_string(value_);
  }

 private:
  constexpr explicit ExtInt(Kind k) : kind_(k) {}
  static constexpr int rank(Kind k) { return k == Kind::NegInf ? 0 : (k == Kind::Finite ? 1 : 2); }

  Kind kind_ = Kind::Finite;
  long long value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const ExtInt& v) { return os << v.to_string(); }

inline ExtInt max(const ExtInt& a, const ExtInt& b) { return a < b ? b : a; }
inline ExtInt min(const ExtInt& a, const ExtInt& b) { return b < a ? b : a; }

}  // namespace dgk

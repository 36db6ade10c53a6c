#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgk/koszul.hpp"

namespace dgk {

/// Multiplicatively closed subset of a Koszul algebra generated by finitely
/// many homogeneous elements. 1 is always a generator. Closure elements are
/// materialized up to products of `word_bound` generators.
class MultiplicativeSet {
 public:
  /// Throws StructuralError on zero or inhomogeneous generators.
  MultiplicativeSet(KoszulPtr algebra, std::vector<KoszulElement> generators, unsigned word_bound = 4);

  const KoszulPtr& algebra() const { return alg_; }
  const std::vector<KoszulElement>& generators() const { return gens_; }
  unsigned word_bound() const { return bound_; }
  /// Distinct products of at most word_bound generators, shortest first. May
  /// contain 0 when an odd generator is present.
  const std::vector<KoszulElement>& closure() const { return closure_; }
  bool in_degree_zero() const;
  bool has_odd_generator() const;

  std::string to_string() const;

 private:
  KoszulPtr alg_;
  std::vector<KoszulElement> gens_;
  unsigned bound_;
  std::vector<KoszulElement> closure_;
};

/// m/u with explicit degree tags, so that zero numerators keep a degree.
struct Fraction {
  KoszulElement num;
  KoszulElement den;
  int num_deg = 0;
  int den_deg = 0;

  int degree() const { return num_deg - den_deg; }
  /// Degrees read off the elements. Throws StructuralError when either is
  /// inhomogeneous or the numerator is zero (use zero()).
  static Fraction make(KoszulElement num, KoszulElement den);
  /// 0/1 in the given degree.
  static Fraction zero(const KoszulPtr& algebra, int degree);
  std::string to_string() const;
};

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

struct EquivResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<KoszulElement> witness;  // w with w(un - (-1)^{|u||v|} vm) = 0
};

/// (m,u) ~ (n,v): equal degrees and some w in U kills un - (-1)^{|u||v|} vm.
/// Searches the materialized closure. `No` is returned only when every
/// generator is a nonzero element of A_0, hence a nonzerodivisor.
EquivResult loc_equiv(const Fraction& a, const Fraction& b, const MultiplicativeSet& u);

/// (u d(m) - d(u) m) / u^2.
Fraction loc_differential(const Fraction& f);
/// (u m' + (-1)^{|u||u'|} u' m) / (u u'). Throws PreconditionError on a degree
/// mismatch.
Fraction loc_add(const Fraction& a, const Fraction& b);
/// (a m) / (u v).
Fraction loc_mul(const Fraction& a, const Fraction& b);

/// True iff some generator has odd degree; then every fraction is 0.
bool odd_denominator_collapse(const MultiplicativeSet& u);

/// Random fraction: numerator of random degree, denominator a nonzero closure
/// element.
Fraction random_fraction(const MultiplicativeSet& u, std::uint64_t& state);

struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t unknown = 0;
  std::string counterexample;  // first failure
  bool passed() const { return failures == 0 && unknown == 0; }
};

struct LocalizeOptions {
  std::size_t fractions = 1000;  // d^2 = 0 samples
  std::size_t pairs = 200;       // representative swaps
  std::size_t leibniz = 500;
  std::size_t positivity = 500;
  std::size_t collapse = 200;
  std::uint64_t seed = 0;
};

struct LocalizeReport {
  std::vector<PropertyResult> properties;
  bool passed() const;
};

/// Runs the localization property suite. Positivity is checked when U lies in
/// A_0. The collapse property runs on U itself when it has an odd generator,
/// and otherwise on U extended by e_1.
LocalizeReport localize_check(const MultiplicativeSet& u, const LocalizeOptions& options);

}  // namespace dgk

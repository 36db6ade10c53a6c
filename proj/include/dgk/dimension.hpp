#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgk/complex.hpp"
#include "dgk/dg_spec.hpp"

namespace dgk {

/// Minimal primes of I when its radical is a monomial ideal; nullopt when it
/// is not (or when R has more than 16 variables). The unit ideal gives none.
std::optional<std::vector<MonomialPrime>> monomial_radical_primes(const IdealPresentation& ideal);

/// Homology of a complex with the support data used by the localized
/// invariants. Monomial radicals are computed on first use.
class ComplexAnalysis {
 public:
  explicit ComplexAnalysis(const FreeComplex& x);

  const FreeComplex& complex() const { return x_; }
  const HomologyTable& homology() const { return h_; }
  const RingPtr& ring() const { return x_.ring(); }
  ExtInt inf() const { return complex_inf(h_); }

  /// Minimal primes of each Fitt_0(H_i) (empty list for H_i = 0), or nullopt
  /// if some radical is not monomial.
  const std::optional<std::vector<std::vector<MonomialPrime>>>& monomial_support() const;
  bool has_monomial_fitting_data() const { return monomial_support().has_value(); }
  /// Some Fitt_0(H_i) is zero, so supp X = Spec R.
  bool support_is_everything() const;

 private:
  FreeComplex x_;
  HomologyTable h_;
  mutable bool support_done_ = false;
  mutable std::optional<std::vector<std::vector<MonomialPrime>>> support_;
};

/// sup_i { dim H_i - i }; -inf for an exact complex.
ExtInt foxby_dim(const ComplexAnalysis& x);
ExtInt foxby_dim(const FreeComplex& x);

/// inf(X_p): least i with Fitt_0(H_i) inside p, +inf if there is none.
/// Containment is tested generator by generator, so any Fitting data works.
ExtInt inf_at_prime(const ComplexAnalysis& x, const MonomialPrime& p);

/// dim_{R_p}(X_p) = sup_i { max (|p| - |q|) over minimal primes q of
/// Fitt_0(H_i) inside p } - i. Needs monomial Fitting data, except at the
/// maximal ideal when the Fitting ideals are homogeneous (global dimensions
/// apply) or all homology has finite length. Throws UnsupportedInput otherwise.
ExtInt dim_at_prime(const ComplexAnalysis& x, const MonomialPrime& p);

/// dim_at_prime == -inf_at_prime with p in supp X. False when X_p is exact.
bool is_anchor_prime(const ComplexAnalysis& x, const MonomialPrime& p);

/// Every homology of K(seq) (x) X has finite length. Throws PreconditionError
/// on an entry with nonzero constant term.
bool is_length_sequence(const FreeComplex& x, const std::vector<Polynomial>& seq);

enum class DimVerdict { Exact, Interval };
std::string to_string(DimVerdict v);

struct DimensionReport {
  ExtInt inf;
  std::vector<std::pair<int, ExtInt>> homology_dims;  // nonzero degrees only
  ExtInt foxby;
  ExtInt ldim_lower;
  ExtInt ldim_upper;
  std::vector<Polynomial> witness;
  bool witness_from_pool = true;  // false: fell back to the variables
  std::size_t candidates_tested = 0;
  DimVerdict verdict = DimVerdict::Interval;
};

/// Variables followed by `extra_forms` seeded random linear forms.
std::vector<Polynomial> default_pool(const RingPtr& ring, std::size_t extra_forms, std::uint64_t seed);

/// Searches subsequences of the pool of size <= limit, shortest first and
/// lexicographic in pool positions; the first length sequence found is the
/// witness. Lower bound: max(foxby_dim, -inf + [empty sequence fails]).
/// Throws PreconditionError on an exact complex.
DimensionReport ldim(const ComplexAnalysis& x, const std::vector<Polynomial>& pool, std::size_t limit);

struct ModuleSopCheck {
  ExtInt dim;           // dim M
  ExtInt quotient_dim;  // dim M / xM
  bool length_matches = false;
  bool quotient_finite = false;
  bool holds() const { return length_matches && quotient_finite; }
};

/// Classical system of parameters for a module.
ModuleSopCheck is_sop_module(const ModulePresentation& m, const std::vector<Polynomial>& seq);

struct ChristensenCheck {
  ExtInt tensor_dim_at_m;
  ExtInt tensor_inf_at_m;
  ExtInt required_length;  // dim X + inf X
  bool anchor = false;
  bool length_matches = false;
  bool holds() const { return anchor && length_matches; }
};

/// m is an anchor prime of K(seq) (x) X and |seq| = dim X + inf X.
ChristensenCheck is_sop_christensen(const FreeComplex& x, const std::vector<Polynomial>& seq);

/// H_0(K(seq) (x) A) and H_0(A)/(seq)H_0(A) present the same quotient of R.
bool h0_iso_check(const KoszulAlgebra& a, const std::vector<Polynomial>& seq);

struct SopCertificate {
  std::vector<Polynomial> sequence;
  ChristensenCheck christensen;
  ModuleSopCheck h0;
  bool length_sequence = false;    // all H_i(K(seq) (x) A) finite length
  std::optional<bool> length_sop;  // nullopt when ldim is not exact
  std::vector<std::pair<int, ExtInt>> tensor_dims;
};

struct TheoremReport {
  SopCertificate certificate;
  ExtInt dgdim;
  DimensionReport ldim;
  ExtInt foxby;
  ExtInt dim_h0;
  bool h0_iso = false;
  bool dims_equal = false;
  bool predicates_agree = false;
  bool finite_length_from_h0_sop = true;  // H_0-sop => finite-length tensor homology
  bool artinian_from_christensen = true;  // Christensen sop => dim H_0/(x) <= 0
  bool inconclusive = false;              // ldim only bracketed
  std::vector<std::string> discrepancies;
  bool passed() const { return !inconclusive && discrepancies.empty(); }
};

/// Evaluates the three sop predicates on seq and the four dimensions of A.
TheoremReport verify_theorem(const KoszulPtr& a, const std::vector<Polynomial>& seq,
                             const std::vector<Polynomial>& pool, std::size_t limit);
/// Same, reusing an ldim report of the underlying complex of A.
TheoremReport verify_theorem(const KoszulPtr& a, const std::vector<Polynomial>& seq, const DimensionReport& ldim);

}  // namespace dgk

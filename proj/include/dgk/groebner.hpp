#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dgk/ext_int.hpp"
#include "dgk/matrix.hpp"
#include "dgk/polynomial.hpp"

namespace dgk {

/// Ideal given by generators; zero generators are dropped.
class IdealPresentation {
 public:
  IdealPresentation() = default;
  IdealPresentation(RingPtr ring, std::vector<Polynomial> gens);
  static IdealPresentation zero(RingPtr ring) { return {std::move(ring), {}}; }
  static IdealPresentation unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_monomial() const;
  IdealPresentation operator+(const IdealPresentation& o) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

/// Prime ideal generated by a subset of the variables, stored as a bitmask.
struct MonomialPrime {
  std::uint64_t mask = 0;

  static MonomialPrime maximal(std::size_t nvars) {
    return {nvars >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << nvars) - 1)};
  }
  int height() const { return __builtin_popcountll(mask); }
  bool contains(const MonomialPrime& o) const { return (o.mask & ~mask) == 0; }
  bool operator==(const MonomialPrime&) const = default;
  /// Size first, then lexicographic on sorted variable indices.
  bool operator<(const MonomialPrime& o) const;
  std::string to_string(const PolyRing& ring) const;
  IdealPresentation ideal(const RingPtr& ring) const;
};

namespace detail {

struct MTerm {
  FieldElement coeff;
  Monomial mono;
  std::uint32_t pos;
};
/// Module element as terms sorted decreasingly in position-over-term order
/// (lower position index is larger).
using MElem = std::vector<MTerm>;

}  // namespace detail

/// Reduced Groebner basis of a submodule of R^rank under position-over-term
/// order (the ring order inside each position). Ideals use rank 1.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  static GroebnerBasis compute(RingPtr ring, std::size_t rank, const std::vector<VectorPoly>& gens);
  static GroebnerBasis compute(const IdealPresentation& ideal);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return basis_.size(); }

  std::vector<VectorPoly> elements() const;
  /// Rank-1 bases only.
  std::vector<Polynomial> polynomials() const;

  VectorPoly reduce(const VectorPoly& v) const;
  Polynomial reduce(const Polynomial& f) const;
  bool contains(const VectorPoly& v) const { return reduce(v).is_zero(); }
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }
  /// The submodule is all of R^rank (for ideals: the unit ideal).
  bool is_everything() const;

  /// Leading monomials of basis elements whose leading position is `pos`.
  std::vector<Monomial> lead_monomials(std::size_t pos = 0) const;
  const std::vector<detail::MElem>& raw() const { return basis_; }

 private:
  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<detail::MElem> basis_;
};

std::vector<Polynomial> groebner_basis(const IdealPresentation& ideal);
std::vector<VectorPoly> groebner_basis(RingPtr ring, std::size_t rank, const std::vector<VectorPoly>& gens);

/// Division remainder of f by the list B (full reduction, first divisor in
/// list order). When B is a Groebner basis this is the normal form.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);
VectorPoly normal_form(const VectorPoly& f, std::span<const VectorPoly> basis);

/// S-polynomial of two elements whose leading terms share a position; zero
/// when positions differ.
VectorPoly s_polynomial(const VectorPoly& f, const VectorPoly& g);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);
/// Buchberger's criterion on a candidate basis.
bool s_pairs_reduce_to_zero(std::span<const VectorPoly> basis);
bool s_pairs_reduce_to_zero(std::span<const Polynomial> basis);

/// Submodule generated by the columns of K (s x g) together with the data
/// needed to express members in terms of those columns.
class ColumnSpan {
 public:
  explicit ColumnSpan(const PolyMatrix& generators);

  /// c with K c = v, or nullopt if v is not in the column span.
  std::optional<VectorPoly> lift(const VectorPoly& v) const;
  /// Columns generate { c : K c = 0 }.
  PolyMatrix syzygies() const;
  const GroebnerBasis& augmented_basis() const { return gb_; }

 private:
  PolyMatrix gens_;
  GroebnerBasis gb_;
};

/// Columns generating the kernel of M : R^cols -> R^rows.
PolyMatrix syzygies(const PolyMatrix& m);

/// Krull dimension of R/I; the unit ideal gives -1.
long ideal_dimension(const IdealPresentation& ideal);
/// Same, from leading monomials of a Groebner basis of I.
long dimension_from_leads(std::size_t nvars, const std::vector<Monomial>& leads, bool unit);

/// Minimal primes of a monomial ideal, sorted. The zero ideal gives the zero
/// prime; the unit ideal gives none. Throws UnsupportedInput on a
/// non-monomial generator.
std::vector<MonomialPrime> minimal_primes_monomial(const IdealPresentation& ideal);

/// Equality of ideals by mutual Groebner membership.
bool same_ideal(const IdealPresentation& a, const IdealPresentation& b);
/// Equality of submodules of R^rank.
bool same_submodule(RingPtr ring, std::size_t rank, const std::vector<VectorPoly>& a,
                    const std::vector<VectorPoly>& b);

/// Membership of f in the radical of I (Rabinowitsch trick).
bool in_radical(const Polynomial& f, const IdealPresentation& ideal);

}  // namespace dgk

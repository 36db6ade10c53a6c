#pragma once

#include <optional>
#include <vector>

#include "dgk/ext_int.hpp"
#include "dgk/groebner.hpp"
#include "dgk/matrix.hpp"

namespace dgk {

/// Finitely generated module coker(relations : R^m -> R^g).
class ModulePresentation {
 public:
  ModulePresentation() = default;
  /// relations must have `generators` rows.
  ModulePresentation(RingPtr ring, std::size_t generators, PolyMatrix relations);
  static ModulePresentation free(RingPtr ring, std::size_t rank);
  /// R/I as a cyclic module.
  static ModulePresentation cyclic(const IdealPresentation& ideal);

  const RingPtr& ring() const { return ring_; }
  std::size_t generators() const { return generators_; }
  const PolyMatrix& relations() const { return relations_; }

  /// Eliminates generators killed by relations with a unit entry and drops
  /// zero relations. The result presents an isomorphic module.
  ModulePresentation pruned() const;
  /// M / (elems) M.
  ModulePresentation quotient_by(const std::vector<Polynomial>& elems) const;
  bool is_zero() const;

 private:
  RingPtr ring_;
  std::size_t generators_ = 0;
  PolyMatrix relations_;
};

/// Bounded complex of free modules X_lo .. X_hi with d_i : X_i -> X_{i-1}
/// stored as rank(i-1) x rank(i) matrices.
class FreeComplex {
 public:
  FreeComplex() = default;
  /// differentials[k] is d_{lo+k+1}. Throws StructuralError on shape or ring
  /// mismatches; does not check d^2 = 0.
  FreeComplex(RingPtr ring, int lo, std::vector<std::size_t> ranks, std::vector<PolyMatrix> differentials);
  /// A single free module of the given rank in degree `degree`.
  static FreeComplex concentrated(RingPtr ring, int degree, std::size_t rank);

  const RingPtr& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int i) const;
  /// d_i, a zero matrix of the right shape outside the window.
  PolyMatrix differential(int i) const;
  const std::vector<std::size_t>& ranks() const { return ranks_; }

  /// Y_i = X_{i-k}, differentials multiplied by (-1)^k.
  FreeComplex shifted(int k) const;

 private:
  RingPtr ring_;
  int lo_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<PolyMatrix> diffs_;
};

struct ComplexViolation {
  int degree;       // d_degree * d_{degree+1} is nonzero
  std::size_t row;  // 1-based
  std::size_t col;  // 1-based
  Polynomial entry;
};

/// nullopt when every composite d_i d_{i+1} vanishes.
std::optional<ComplexViolation> validate_complex(const FreeComplex& x);

/// H_i = ker d_i / im d_{i+1}. Generators are the syzygy basis of d_i;
/// relations are the coordinates of the columns of d_{i+1} in those
/// generators followed by the syzygies among the generators.
ModulePresentation homology(const FreeComplex& x, int i);

/// Zeroth Fitting ideal: maximal minors of the relation matrix. Same radical
/// as the annihilator. The zero module gives the unit ideal.
IdealPresentation fitting_support(const ModulePresentation& m);

/// Krull dimension; -inf for the zero module.
ExtInt module_dim(const ModulePresentation& m);

/// Under the graded-local convention: dimension at most 0.
bool is_finite_length(const ModulePresentation& m);

struct HomologyEntry {
  int degree = 0;
  ModulePresentation module;  // pruned
  IdealPresentation fitting;
  GroebnerBasis fitting_basis;
  ExtInt dim;  // -inf iff the module is zero

  bool is_zero() const { return dim.is_neg_inf(); }
};

/// Homology of every degree in the window with cached Fitting data.
class HomologyTable {
 public:
  explicit HomologyTable(const FreeComplex& x);

  const RingPtr& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(entries_.size()) - 1; }
  const std::vector<HomologyEntry>& entries() const { return entries_; }
  /// Throws std::out_of_range outside the window.
  const HomologyEntry& at(int i) const { return entries_.at(static_cast<std::size_t>(i - lo_)); }

 private:
  RingPtr ring_;
  int lo_ = 0;
  std::vector<HomologyEntry> entries_;
};

/// Least i with H_i != 0, or +inf when the complex is exact.
ExtInt complex_inf(const FreeComplex& x);
ExtInt complex_inf(const HomologyTable& h);

/// Total complex of K(seq) (x) X with d(e (x) v) = d(e) (x) v + (-1)^{|e|} e (x) d(v).
FreeComplex tensor_with_koszul(const FreeComplex& x, const std::vector<Polynomial>& seq);

}  // namespace dgk

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dgk/complex.hpp"
#include "dgk/random.hpp"
#include "dgk/subsets.hpp"

namespace dgk {

/// The Koszul complex K^R(x_1..x_s) with its exterior-algebra product.
/// Basis elements e_S are indexed by subsets S of {0..s-1}.
class KoszulAlgebra {
 public:
  /// Throws PreconditionError if an entry has a nonzero constant term
  /// (graded-local convention), StructuralError on ring mismatch.
  KoszulAlgebra(RingPtr ring, std::vector<Polynomial> sequence);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& sequence() const { return seq_; }
  unsigned length() const { return static_cast<unsigned>(seq_.size()); }
  /// Canonical basis of degree k.
  const std::vector<Subset>& basis(unsigned k) const { return basis_.at(k); }
  std::size_t index_of(Subset s) const;

  bool operator==(const KoszulAlgebra& o) const { return same_ring(ring_, o.ring_) && seq_ == o.seq_; }

 private:
  RingPtr ring_;
  std::vector<Polynomial> seq_;
  std::vector<std::vector<Subset>> basis_;
};

using KoszulPtr = std::shared_ptr<const KoszulAlgebra>;

KoszulPtr make_koszul(RingPtr ring, std::vector<Polynomial> sequence);

struct SubsetOrder {
  bool operator()(Subset a, Subset b) const { return subset_less(a, b); }
};

/// Element sum_S c_S e_S of K. Zero coefficients are never stored.
class KoszulElement {
 public:
  KoszulElement() = default;
  explicit KoszulElement(KoszulPtr algebra) : alg_(std::move(algebra)) {}

  static KoszulElement basis(KoszulPtr algebra, Subset s);
  static KoszulElement scalar(KoszulPtr algebra, const Polynomial& c);
  static KoszulElement one(KoszulPtr algebra);

  const KoszulPtr& algebra() const { return alg_; }
  const std::map<Subset, Polynomial, SubsetOrder>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Exterior degree when every term has the same size; nullopt for zero or
  /// inhomogeneous elements.
  std::optional<int> degree() const;
  Polynomial coefficient(Subset s) const;

  KoszulElement operator+(const KoszulElement& o) const;
  KoszulElement operator-(const KoszulElement& o) const;
  KoszulElement operator-() const;
  KoszulElement operator*(const Polynomial& c) const;
  bool operator==(const KoszulElement& o) const;

  /// Coordinates in the canonical basis of degree k (other degrees ignored).
  VectorPoly coordinates(unsigned k) const;
  static KoszulElement from_coordinates(KoszulPtr algebra, unsigned k, const VectorPoly& v);

  std::string to_string() const;

 private:
  void require_same(const KoszulElement& o) const;
  void add_term(Subset s, const Polynomial& c);

  KoszulPtr alg_;
  std::map<Subset, Polynomial, SubsetOrder> terms_;
};

/// e_S ^ e_T = sign(S,T) e_{S u T}, zero when S and T meet.
KoszulElement wedge(const KoszulElement& a, const KoszulElement& b);

/// d(e_{i_1 < ... < i_k}) = sum_j (-1)^{j+1} x_{i_j} e_{S \ i_j}, extended R-linearly.
KoszulElement koszul_differential(const KoszulElement& a);

using ProductFn = std::function<KoszulElement(const KoszulElement&, const KoszulElement&)>;

struct AxiomFailure {
  std::string axiom;
  std::string detail;
};

struct AxiomReport {
  bool passed = true;
  std::size_t checks = 0;
  std::vector<AxiomFailure> failures;  // first counterexample per axiom
  bool failed(const std::string& axiom) const;
};

/// Checks the DG algebra axioms (associativity, distributivity, unit, graded
/// commutativity, odd squares, Leibniz) on random homogeneous samples.
/// `product` defaults to wedge; tests substitute broken products.
AxiomReport dg_axiom_check(const KoszulPtr& algebra, std::size_t sample_count, std::uint64_t seed,
                           const ProductFn& product = {});

/// Same axioms on every pair (and triple, for associativity) of basis elements.
AxiomReport dg_axiom_check_exhaustive(const KoszulPtr& algebra, const ProductFn& product = {});

/// The underlying complex: ranks C(s,k), matrices in the canonical basis.
FreeComplex to_free_complex(const KoszulAlgebra& algebra);

/// Random homogeneous Koszul element of exterior degree k.
KoszulElement random_element(const KoszulPtr& algebra, unsigned k, std::uint64_t& state);

}  // namespace dgk

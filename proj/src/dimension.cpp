#include "dgk/dimension.hpp"

#include <algorithm>

#include "dgk/errors.hpp"
#include "dgk/random.hpp"

namespace dgk {

std::optional<std::vector<MonomialPrime>> monomial_radical_primes(const IdealPresentation& ideal) {
  auto gb = GroebnerBasis::compute(ideal);
  if (gb.is_everything()) return std::vector<MonomialPrime>{};
  auto basis = gb.polynomials();
  if (std::all_of(basis.begin(), basis.end(), [](const Polynomial& f) { return f.is_monomial(); }))
    return minimal_primes_monomial(IdealPresentation(ideal.ring(), basis));
  const std::size_t n = ideal.ring()->nvars();
  if (n > 16) return std::nullopt;
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint64_t> above;
  for (std::uint64_t m = 0; m < count; ++m)
    if (std::all_of(basis.begin(), basis.end(), [&](const Polynomial& f) { return f.in_monomial_prime(m); }))
      above.push_back(m);
  std::vector<MonomialPrime> minimal;
  for (auto m : above)
    if (std::none_of(above.begin(), above.end(), [&](std::uint64_t o) { return o != m && (o & ~m) == 0; }))
      minimal.push_back({m});
  if (minimal.empty()) return std::nullopt;
  // The intersection of the minimal primes is generated by the squarefree
  // monomials on minimal transversals; it equals the radical iff each of
  // them lies in the radical.
  std::vector<std::uint64_t> hitting;
  for (std::uint64_t t = 0; t < count; ++t)
    if (std::all_of(minimal.begin(), minimal.end(), [&](const MonomialPrime& p) { return (p.mask & t) != 0; }))
      hitting.push_back(t);
  for (auto t : hitting) {
    bool is_minimal = std::none_of(hitting.begin(), hitting.end(), [&](std::uint64_t o) { return o != t && (o & ~t) == 0; });
    if (!is_minimal) continue;
    Monomial mono(n);
    for (std::size_t i = 0; i < n; ++i)
      if (t >> i & 1) mono[i] = 1;
    if (!in_radical(Polynomial::monomial(ideal.ring(), 1, mono), ideal)) return std::nullopt;
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

// ---------------------------------------------------------------------------

ComplexAnalysis::ComplexAnalysis(const FreeComplex& x) : x_(x), h_(x) {}

const std::optional<std::vector<std::vector<MonomialPrime>>>& ComplexAnalysis::monomial_support() const {
  if (support_done_) return support_;
  support_done_ = true;
  std::vector<std::vector<MonomialPrime>> out;
  for (const auto& e : h_.entries()) {
    if (e.is_zero()) {
      out.emplace_back();
      continue;
    }
    auto primes = monomial_radical_primes(e.fitting);
    if (!primes) return support_;
    out.push_back(std::move(*primes));
  }
  support_ = std::move(out);
  return support_;
}

bool ComplexAnalysis::support_is_everything() const {
  return std::any_of(h_.entries().begin(), h_.entries().end(),
                     [](const HomologyEntry& e) { return !e.is_zero() && e.fitting.generators().empty(); });
}

ExtInt foxby_dim(const ComplexAnalysis& x) {
  ExtInt best = ExtInt::neg_inf();
  for (const auto& e : x.homology().entries())
    if (!e.is_zero()) best = max(best, e.dim - e.degree);
  return best;
}

ExtInt foxby_dim(const FreeComplex& x) { return foxby_dim(ComplexAnalysis(x)); }

namespace {

bool contains_fitting(const MonomialPrime& p, const HomologyEntry& e) {
  const auto& g = e.fitting.generators();
  return std::all_of(g.begin(), g.end(), [&](const Polynomial& f) { return f.in_monomial_prime(p.mask); });
}

bool homogeneous_basis(const HomologyEntry& e) {
  auto basis = e.fitting_basis.polynomials();
  return std::all_of(basis.begin(), basis.end(), [](const Polynomial& f) { return f.is_homogeneous(); });
}

}  // namespace

ExtInt inf_at_prime(const ComplexAnalysis& x, const MonomialPrime& p) {
  for (const auto& e : x.homology().entries())
    if (!e.is_zero() && contains_fitting(p, e)) return ExtInt(e.degree);
  return ExtInt::pos_inf();
}

ExtInt dim_at_prime(const ComplexAnalysis& x, const MonomialPrime& p) {
  const auto& entries = x.homology().entries();
  if (const auto& support = x.monomial_support()) {
    ExtInt best = ExtInt::neg_inf();
    for (std::size_t k = 0; k < entries.size(); ++k)
      for (const auto& q : (*support)[k])
        if (p.contains(q)) best = max(best, ExtInt(p.height() - q.height() - entries[k].degree));
    return best;
  }
  if (p == MonomialPrime::maximal(x.ring()->nvars())) {
    bool homogeneous = std::all_of(entries.begin(), entries.end(),
                                   [](const HomologyEntry& e) { return e.is_zero() || homogeneous_basis(e); });
    if (homogeneous) return foxby_dim(x);
    bool finite = std::all_of(entries.begin(), entries.end(), [](const HomologyEntry& e) { return e.dim <= ExtInt(0); });
    if (finite) return -inf_at_prime(x, p);
  }
  throw UnsupportedInput("localized dimension needs monomial Fitting data away from homogeneous or finite-length cases");
}

bool is_anchor_prime(const ComplexAnalysis& x, const MonomialPrime& p) {
  ExtInt inf = inf_at_prime(x, p);
  if (!inf.is_finite()) return false;
  return dim_at_prime(x, p) == -inf;
}

namespace {

void require_in_maximal_ideal(const std::vector<Polynomial>& seq) {
  for (const auto& f : seq)
    if (f.constant_term() != 0) throw PreconditionError(f.to_string() + " is not in the maximal ideal");
}

}  // namespace

bool is_length_sequence(const FreeComplex& x, const std::vector<Polynomial>& seq) {
  require_in_maximal_ideal(seq);
  FreeComplex t = tensor_with_koszul(x, seq);
  for (int i = t.lo(); i <= t.hi(); ++i)
    if (!is_finite_length(homology(t, i))) return false;
  return true;
}

std::string to_string(DimVerdict v) { return v == DimVerdict::Exact ? "exact" : "interval"; }

std::vector<Polynomial> default_pool(const RingPtr& ring, std::size_t extra_forms, std::uint64_t seed) {
  std::vector<Polynomial> pool;
  for (std::size_t i = 0; i < ring->nvars(); ++i) pool.push_back(Polynomial::variable(ring, i));
  std::uint64_t s = seed;
  for (std::size_t k = 0; k < extra_forms && ring->nvars() > 0; ++k) pool.push_back(random_linear_form(ring, s));
  return pool;
}

DimensionReport ldim(const ComplexAnalysis& x, const std::vector<Polynomial>& pool, std::size_t limit) {
  require_in_maximal_ideal(pool);
  DimensionReport r;
  r.inf = x.inf();
  if (!r.inf.is_finite()) throw PreconditionError("the complex is exact");
  for (const auto& e : x.homology().entries())
    if (!e.is_zero()) r.homology_dims.emplace_back(e.degree, e.dim);
  r.foxby = foxby_dim(x);
  const std::size_t n = x.ring()->nvars();
  const std::size_t top = std::min({limit, pool.size(), n});

  bool empty_works = false;
  bool found = false;
  for (std::size_t len = 0; len <= top && !found; ++len) {
    std::vector<std::size_t> idx(len);
    for (std::size_t k = 0; k < len; ++k) idx[k] = k;
    while (true) {
      std::vector<Polynomial> seq;
      for (auto k : idx) seq.push_back(pool[k]);
      ++r.candidates_tested;
      if (is_length_sequence(x.complex(), seq)) {
        r.witness = std::move(seq);
        found = true;
        empty_works = (len == 0);
        break;
      }
      // next combination in lexicographic order
      std::size_t k = len;
      while (k > 0 && idx[k - 1] == pool.size() - len + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < len; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  if (!found) {
    // The variables generate the maximal ideal, which always works.
    r.witness = default_pool(x.ring(), 0, 0);
    r.witness_from_pool = false;
    if (!is_length_sequence(x.complex(), r.witness))
      throw StructuralError("the variables do not form a length sequence");
  }
  r.ldim_upper = ExtInt(static_cast<long long>(r.witness.size())) - r.inf.value();
  r.ldim_lower = max(r.foxby, (-r.inf) + (empty_works ? 0 : 1));
  r.verdict = r.ldim_lower == r.ldim_upper ? DimVerdict::Exact : DimVerdict::Interval;
  return r;
}

ModuleSopCheck is_sop_module(const ModulePresentation& m, const std::vector<Polynomial>& seq) {
  require_in_maximal_ideal(seq);
  ModuleSopCheck c;
  c.dim = module_dim(m);
  c.quotient_dim = module_dim(m.quotient_by(seq));
  c.length_matches = c.dim == ExtInt(static_cast<long long>(seq.size()));
  c.quotient_finite = c.quotient_dim <= ExtInt(0);
  return c;
}

namespace {

ChristensenCheck christensen(const ComplexAnalysis& x, const ComplexAnalysis& t, std::size_t length) {
  ChristensenCheck c;
  const MonomialPrime m = MonomialPrime::maximal(x.ring()->nvars());
  c.required_length = foxby_dim(x) + (x.inf().is_finite() ? x.inf().value() : 0);
  c.length_matches = c.required_length == ExtInt(static_cast<long long>(length));
  c.tensor_inf_at_m = inf_at_prime(t, m);
  c.tensor_dim_at_m = dim_at_prime(t, m);
  c.anchor = c.tensor_inf_at_m.is_finite() && c.tensor_dim_at_m == -c.tensor_inf_at_m;
  return c;
}

std::vector<std::pair<int, ExtInt>> nonzero_dims(const ComplexAnalysis& t) {
  std::vector<std::pair<int, ExtInt>> out;
  for (const auto& e : t.homology().entries())
    if (!e.is_zero()) out.emplace_back(e.degree, e.dim);
  return out;
}

std::string seq_string(const std::vector<Polynomial>& seq) {
  std::string s = "(";
  for (std::size_t k = 0; k < seq.size(); ++k) s += (k ? ", " : "") + seq[k].to_string();
  return s + ")";
}

}  // namespace

ChristensenCheck is_sop_christensen(const FreeComplex& x, const std::vector<Polynomial>& seq) {
  require_in_maximal_ideal(seq);
  ComplexAnalysis ax(x), at(tensor_with_koszul(x, seq));
  return christensen(ax, at, seq.size());
}

bool h0_iso_check(const KoszulAlgebra& a, const std::vector<Polynomial>& seq) {
  require_in_maximal_ideal(seq);
  const auto& r = a.ring();
  ModulePresentation lhs = homology(tensor_with_koszul(to_free_complex(a), seq), 0).pruned();
  std::vector<Polynomial> gens = a.sequence();
  gens.insert(gens.end(), seq.begin(), seq.end());
  ModulePresentation rhs = ModulePresentation::cyclic(IdealPresentation(r, gens)).pruned();
  if (lhs.generators() != rhs.generators()) return false;
  return same_submodule(r, lhs.generators(), lhs.relations().columns(), rhs.relations().columns());
}

TheoremReport verify_theorem(const KoszulPtr& a, const std::vector<Polynomial>& seq, const DimensionReport& ld) {
  require_in_maximal_ideal(seq);
  TheoremReport rep;
  FreeComplex x = to_free_complex(*a);
  ComplexAnalysis ax(x), at(tensor_with_koszul(x, seq));
  ModulePresentation h0 = algebra_h0(a);

  rep.ldim = ld;
  rep.dgdim = dgdim(a);
  rep.foxby = foxby_dim(ax);
  rep.dim_h0 = module_dim(h0);
  rep.h0_iso = h0_iso_check(*a, seq);

  auto& c = rep.certificate;
  c.sequence = seq;
  c.christensen = christensen(ax, at, seq.size());
  c.h0 = is_sop_module(h0, seq);
  c.tensor_dims = nonzero_dims(at);
  c.length_sequence = std::all_of(at.homology().entries().begin(), at.homology().entries().end(),
                                  [](const HomologyEntry& e) { return e.dim <= ExtInt(0); });
  if (ld.verdict == DimVerdict::Exact)
    c.length_sop = c.length_sequence && ExtInt(static_cast<long long>(seq.size())) == ld.ldim_upper + ld.inf.value();

  rep.inconclusive = ld.verdict != DimVerdict::Exact;
  const std::string where = "x = " + seq_string(seq) + ": ";
  rep.dims_equal = rep.dgdim == rep.foxby && rep.foxby == rep.dim_h0 && !rep.inconclusive && ld.ldim_upper == rep.foxby;
  if (!rep.inconclusive && !rep.dims_equal)
    rep.discrepancies.push_back("dimensions differ: dgdim " + rep.dgdim.to_string() + ", ldim " +
                                ld.ldim_upper.to_string() + ", dim_A0(A) " + rep.foxby.to_string() + ", dim H_0 " +
                                rep.dim_h0.to_string());
  if (c.length_sop) {
    rep.predicates_agree = c.christensen.holds() == c.h0.holds() && c.h0.holds() == *c.length_sop;
    if (!rep.predicates_agree)
      rep.discrepancies.push_back(where + "sop predicates disagree (christensen " +
                                  std::to_string(c.christensen.holds()) + ", H_0 " + std::to_string(c.h0.holds()) +
                                  ", length " + std::to_string(*c.length_sop) + ")");
  }
  rep.finite_length_from_h0_sop = !c.h0.holds() || c.length_sequence;
  if (!rep.finite_length_from_h0_sop)
    rep.discrepancies.push_back(where + "H_0 sop with infinite-length tensor homology");
  rep.artinian_from_christensen = !c.christensen.holds() || c.h0.quotient_dim <= ExtInt(0);
  if (!rep.artinian_from_christensen)
    rep.discrepancies.push_back(where + "Christensen sop with dim H_0/(x) = " + c.h0.quotient_dim.to_string());
  if (!rep.h0_iso) rep.discrepancies.push_back(where + "H_0 of the tensor differs from H_0(A)/(x)");
  return rep;
}

TheoremReport verify_theorem(const KoszulPtr& a, const std::vector<Polynomial>& seq,
                             const std::vector<Polynomial>& pool, std::size_t limit) {
  return verify_theorem(a, seq, ldim(ComplexAnalysis(to_free_complex(*a)), pool, limit));
}

}  // namespace dgk

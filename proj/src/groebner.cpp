#include "dgk/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dgk/errors.hpp"

namespace dgk {

using detail::MElem;
using detail::MTerm;

// ---------------------------------------------------------------------------
// IdealPresentation / MonomialPrime

IdealPresentation::IdealPresentation(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring_)) throw StructuralError("ideal generator from a different ring");
    gens_.push_back(std::move(g));
  }
}

IdealPresentation IdealPresentation::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return {std::move(ring), {one}};
}

bool IdealPresentation::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

IdealPresentation IdealPresentation::operator+(const IdealPresentation& o) const {
  if (!same_ring(ring_, o.ring_)) throw StructuralError("ideals over different rings");
  auto gens = gens_;
  gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
  return {ring_, std::move(gens)};
}

bool MonomialPrime::operator<(const MonomialPrime& o) const {
  int a = height(), b = o.height();
  if (a != b) return a < b;
  std::uint64_t diff = mask ^ o.mask;
  if (diff == 0) return false;
  std::uint64_t low = diff & (~diff + 1);
  return (mask & low) != 0;
}

std::string MonomialPrime::to_string(const PolyRing& ring) const {
  std::string s = "(";
  bool first = true;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (!(mask >> i & 1)) continue;
    s += (first ? "" : ",") + ring.variables()[i];
    first = false;
  }
  return first ? "(0)" : s + ")";
}

IdealPresentation MonomialPrime::ideal(const RingPtr& ring) const {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (mask >> i & 1) gens.push_back(Polynomial::variable(ring, i));
  return {ring, std::move(gens)};
}

// ---------------------------------------------------------------------------
// Module element arithmetic (position-over-term)

namespace {

struct Ctx {
  const PolyRing& ring;
  std::size_t rank;

  std::strong_ordering cmp(const MTerm& a, const MTerm& b) const {
    if (a.pos != b.pos) return b.pos <=> a.pos;
    return ring.order().compare_unchecked(a.mono, b.mono);
  }
  const Field& field() const { return ring.field(); }
};

MElem to_elem(const VectorPoly& v) {
  MElem e;
  for (std::size_t p = 0; p < v.rank(); ++p)
    for (const auto& t : v[p].terms()) e.push_back({t.coeff, t.mono, static_cast<std::uint32_t>(p)});
  return e;
}

VectorPoly from_elem(const RingPtr& ring, std::size_t rank, const MElem& e) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : e) parts[t.pos].push_back({t.coeff, t.mono});
  std::vector<Polynomial> coords;
  coords.reserve(rank);
  for (auto& p : parts) coords.push_back(Polynomial::from_terms(ring, std::move(p)));
  return VectorPoly(ring, std::move(coords));
}

// f[start..] - c * m * g
MElem sub_mul(const Ctx& ctx, const MElem& f, std::size_t start, const FieldElement& c, const Monomial& m,
              const MElem& g) {
  const auto& field = ctx.field();
  MElem out;
  out.reserve(f.size() - start + g.size());
  std::size_t i = start, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    MTerm gt{field.neg(field.mul(c, g[j].coeff)), g[j].mono * m, g[j].pos};
    if (i == f.size()) {
      out.push_back(std::move(gt));
      ++j;
      continue;
    }
    auto ord = ctx.cmp(f[i], gt);
    if (ord > 0) {
      out.push_back(f[i++]);
    } else if (ord < 0) {
      out.push_back(std::move(gt));
      ++j;
    } else {
      FieldElement s = field.add(f[i].coeff, gt.coeff);
      if (s != 0) out.push_back({std::move(s), f[i].mono, f[i].pos});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(const Ctx& ctx, MElem& e) {
  if (e.empty() || e.front().coeff == 1) return;
  FieldElement inv = ctx.field().inv(e.front().coeff);
  for (auto& t : e) t.coeff = ctx.field().mul(t.coeff, inv);
}

// Full reduction of f by `basis`; `skip` excludes one index.
MElem reduce_full(const Ctx& ctx, MElem f, const std::vector<MElem>& basis, std::size_t skip = SIZE_MAX) {
  MElem result;
  std::size_t start = 0;
  while (start < f.size()) {
    const MTerm& lead = f[start];
    const MElem* divisor = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      const MTerm& bl = basis[k].front();
      if (bl.pos == lead.pos && bl.mono.divides(lead.mono)) {
        divisor = &basis[k];
        break;
      }
    }
    if (!divisor) {
      result.push_back(lead);
      ++start;
      continue;
    }
    const MTerm& bl = divisor->front();
    FieldElement c = ctx.field().div(lead.coeff, bl.coeff);
    Monomial q = bl.mono.quotient_of(lead.mono);
    f = sub_mul(ctx, f, start, c, q, *divisor);
    start = 0;
  }
  return result;
}

MElem spoly(const Ctx& ctx, const MElem& f, const MElem& g) {
  const MTerm& a = f.front();
  const MTerm& b = g.front();
  Monomial l = a.mono.lcm(b.mono);
  const auto& field = ctx.field();
  // (l/a) f / lc(f) - (l/b) g / lc(g)
  MElem ff;
  FieldElement ca = field.inv(a.coeff);
  Monomial qa = a.mono.quotient_of(l);
  ff.reserve(f.size());
  for (const auto& t : f) ff.push_back({field.mul(t.coeff, ca), t.mono * qa, t.pos});
  FieldElement cb = field.inv(b.coeff);
  return sub_mul(ctx, ff, 0, cb, b.mono.quotient_of(l), g);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t pos;
};

std::vector<MElem> buchberger(const Ctx& ctx, std::vector<MElem> input) {
  std::vector<MElem> g;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](MElem h) {
    make_monic(ctx, h);
    std::size_t n = g.size();
    for (std::size_t k = 0; k < n; ++k) {
      if (g[k].front().pos != h.front().pos) continue;
      pairs.push_back({k, n, g[k].front().mono.lcm(h.front().mono), h.front().pos});
      pending.insert({k, n});
    }
    g.push_back(std::move(h));
  };

  // Deterministic input order: sort generators by leading term, smallest first.
  std::stable_sort(input.begin(), input.end(), [&](const MElem& a, const MElem& b) {
    if (a.empty() || b.empty()) return !a.empty() < !b.empty();
    return ctx.cmp(a.front(), b.front()) < 0;
  });
  for (auto& f : input) {
    MElem h = reduce_full(ctx, std::move(f), g);
    if (!h.empty()) add(std::move(h));
  }

  const auto& order = ctx.ring.order();
  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      auto da = a.lcm.degree(), db = b.lcm.degree();
      if (da != db) {
        if (da < db) best = k;
        continue;
      }
      auto c = order.compare_unchecked(a.lcm, b.lcm);
      if (c != 0) {
        if (c < 0) best = k;
        continue;
      }
      if (std::tie(a.pos, a.j, a.i) < std::tie(b.pos, b.j, b.i)) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    pending.erase({p.i, p.j});

    const MTerm& li = g[p.i].front();
    const MTerm& lj = g[p.j].front();
    if (ctx.rank == 1 && li.mono.coprime(lj.mono)) continue;

    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      const MTerm& lk = g[k].front();
      if (lk.pos != p.pos || !lk.mono.divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) chain = true;
    }
    if (chain) continue;

    MElem h = reduce_full(ctx, spoly(ctx, g[p.i], g[p.j]), g);
    if (!h.empty()) add(std::move(h));
  }

  // Minimize, interreduce, normalize.
  std::vector<MElem> kept;
  for (std::size_t a = 0; a < g.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < g.size() && !redundant; ++b) {
      if (a == b) continue;
      const MTerm& la = g[a].front();
      const MTerm& lb = g[b].front();
      if (la.pos != lb.pos || !lb.mono.divides(la.mono)) continue;
      if (!(la.mono == lb.mono) || b < a) redundant = true;
    }
    if (!redundant) kept.push_back(g[a]);
  }
  for (std::size_t a = 0; a < kept.size(); ++a) {
    MElem tail(kept[a].begin() + 1, kept[a].end());
    MElem red = reduce_full(ctx, std::move(tail), kept, a);
    MElem full;
    full.reserve(red.size() + 1);
    full.push_back(kept[a].front());
    full.insert(full.end(), red.begin(), red.end());
    make_monic(ctx, full);
    kept[a] = std::move(full);
  }
  std::sort(kept.begin(), kept.end(), [&](const MElem& a, const MElem& b) { return ctx.cmp(a.front(), b.front()) > 0; });
  return kept;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroebnerBasis

GroebnerBasis GroebnerBasis::compute(RingPtr ring, std::size_t rank, const std::vector<VectorPoly>& gens) {
  GroebnerBasis gb;
  gb.ring_ = ring;
  gb.rank_ = rank;
  Ctx ctx{*ring, rank};
  std::vector<MElem> input;
  for (const auto& v : gens) {
    if (v.rank() != rank) throw StructuralError("generator has wrong rank");
    if (v.ring() && !same_ring(v.ring(), ring)) throw StructuralError("generator from a different ring");
    MElem e = to_elem(v);
    if (!e.empty()) input.push_back(std::move(e));
  }
  gb.basis_ = buchberger(ctx, std::move(input));
  return gb;
}

GroebnerBasis GroebnerBasis::compute(const IdealPresentation& ideal) {
  std::vector<VectorPoly> gens;
  for (const auto& g : ideal.generators()) gens.emplace_back(ideal.ring(), std::vector<Polynomial>{g});
  return compute(ideal.ring(), 1, gens);
}

std::vector<VectorPoly> GroebnerBasis::elements() const {
  std::vector<VectorPoly> out;
  out.reserve(basis_.size());
  for (const auto& e : basis_) out.push_back(from_elem(ring_, rank_, e));
  return out;
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  if (rank_ != 1) throw StructuralError("polynomials() on a module basis");
  std::vector<Polynomial> out;
  for (const auto& e : basis_) out.push_back(from_elem(ring_, 1, e)[0]);
  return out;
}

VectorPoly GroebnerBasis::reduce(const VectorPoly& v) const {
  if (v.rank() != rank_) throw StructuralError("vector has wrong rank");
  Ctx ctx{*ring_, rank_};
  return from_elem(ring_, rank_, reduce_full(ctx, to_elem(v), basis_));
}

Polynomial GroebnerBasis::reduce(const Polynomial& f) const {
  return reduce(VectorPoly(ring_, std::vector<Polynomial>{f}))[0];
}

bool GroebnerBasis::is_everything() const {
  std::vector<bool> hit(rank_, false);
  for (const auto& e : basis_)
    if (e.front().mono.is_one()) hit[e.front().pos] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<Monomial> GroebnerBasis::lead_monomials(std::size_t pos) const {
  std::vector<Monomial> out;
  for (const auto& e : basis_)
    if (e.front().pos == pos) out.push_back(e.front().mono);
  return out;
}

std::vector<Polynomial> groebner_basis(const IdealPresentation& ideal) {
  return GroebnerBasis::compute(ideal).polynomials();
}

std::vector<VectorPoly> groebner_basis(RingPtr ring, std::size_t rank, const std::vector<VectorPoly>& gens) {
  return GroebnerBasis::compute(std::move(ring), rank, gens).elements();
}

// ---------------------------------------------------------------------------
// Division and S-pairs on caller-supplied lists

VectorPoly normal_form(const VectorPoly& f, std::span<const VectorPoly> basis) {
  const RingPtr& ring = f.ring();
  Ctx ctx{*ring, f.rank()};
  std::vector<MElem> b;
  for (const auto& v : basis) {
    if (v.rank() != f.rank()) throw StructuralError("basis element has wrong rank");
    b.push_back(to_elem(v));
  }
  return from_elem(ring, f.rank(), reduce_full(ctx, to_elem(f), b));
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  std::vector<VectorPoly> b;
  for (const auto& p : basis) b.emplace_back(f.ring(), std::vector<Polynomial>{p});
  return normal_form(VectorPoly(f.ring(), std::vector<Polynomial>{f}), b)[0];
}

VectorPoly s_polynomial(const VectorPoly& f, const VectorPoly& g) {
  Ctx ctx{*f.ring(), f.rank()};
  MElem a = to_elem(f), b = to_elem(g);
  if (a.empty() || b.empty() || a.front().pos != b.front().pos) return VectorPoly(f.ring(), f.rank());
  return from_elem(f.ring(), f.rank(), spoly(ctx, a, b));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  return s_polynomial(VectorPoly(f.ring(), std::vector<Polynomial>{f}), VectorPoly(g.ring(), std::vector<Polynomial>{g}))[0];
}

bool s_pairs_reduce_to_zero(std::span<const VectorPoly> basis) {
  if (basis.empty()) return true;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

bool s_pairs_reduce_to_zero(std::span<const Polynomial> basis) {
  std::vector<VectorPoly> b;
  for (const auto& p : basis) b.emplace_back(p.ring(), std::vector<Polynomial>{p});
  return s_pairs_reduce_to_zero(std::span<const VectorPoly>(b));
}

// ---------------------------------------------------------------------------
// Lifting and syzygies

ColumnSpan::ColumnSpan(const PolyMatrix& generators) : gens_(generators) {
  const std::size_t s = generators.rows(), g = generators.cols();
  std::vector<VectorPoly> aug;
  aug.reserve(g);
  for (std::size_t j = 0; j < g; ++j) {
    std::vector<Polynomial> coords;
    coords.reserve(s + g);
    for (std::size_t r = 0; r < s; ++r) coords.push_back(generators.at(r, j));
    for (std::size_t r = 0; r < g; ++r) coords.push_back(Polynomial::constant(generators.ring(), r == j ? 1 : 0));
    aug.emplace_back(generators.ring(), std::move(coords));
  }
  gb_ = GroebnerBasis::compute(generators.ring(), s + g, aug);
}

std::optional<VectorPoly> ColumnSpan::lift(const VectorPoly& v) const {
  const std::size_t s = gens_.rows(), g = gens_.cols();
  if (v.rank() != s) throw StructuralError("vector has wrong rank for lifting");
  std::vector<Polynomial> coords(v.coords());
  coords.resize(s + g, Polynomial(gens_.ring()));
  VectorPoly r = gb_.reduce(VectorPoly(gens_.ring(), std::move(coords)));
  for (std::size_t i = 0; i < s; ++i)
    if (!r[i].is_zero()) return std::nullopt;
  std::vector<Polynomial> c;
  c.reserve(g);
  for (std::size_t i = 0; i < g; ++i) c.push_back(-r[s + i]);
  return VectorPoly(gens_.ring(), std::move(c));
}

PolyMatrix ColumnSpan::syzygies() const {
  const std::size_t s = gens_.rows(), g = gens_.cols();
  std::vector<VectorPoly> cols;
  for (const auto& e : gb_.raw()) {
    if (e.front().pos < s) continue;
    VectorPoly full = from_elem(gens_.ring(), s + g, e);
    std::vector<Polynomial> c(full.coords().begin() + static_cast<long>(s), full.coords().end());
    cols.emplace_back(gens_.ring(), std::move(c));
  }
  return PolyMatrix::from_columns(gens_.ring(), g, cols);
}

PolyMatrix syzygies(const PolyMatrix& m) { return ColumnSpan(m).syzygies(); }

// ---------------------------------------------------------------------------
// Dimension and monomial primes

long dimension_from_leads(std::size_t nvars, const std::vector<Monomial>& leads, bool unit) {
  if (unit) return -1;
  if (nvars > 64) throw UnsupportedInput("dimension computation limited to 64 variables");
  std::vector<std::uint64_t> supports;
  for (const auto& m : leads) supports.push_back(m.support());
  auto independent = [&](std::uint64_t mask) {
    return std::all_of(supports.begin(), supports.end(), [mask](std::uint64_t s) { return (s & ~mask) != 0; });
  };
  long best = 0;
  std::function<void(std::size_t, std::uint64_t, long)> rec = [&](std::size_t idx, std::uint64_t mask, long size) {
    if (size + static_cast<long>(nvars - idx) <= best) return;
    if (idx == nvars) {
      best = size;
      return;
    }
    std::uint64_t with = mask | (std::uint64_t{1} << idx);
    if (independent(with)) rec(idx + 1, with, size + 1);
    rec(idx + 1, mask, size);
  };
  rec(0, 0, 0);
  return best;
}

long ideal_dimension(const IdealPresentation& ideal) {
  auto gb = GroebnerBasis::compute(ideal);
  return dimension_from_leads(ideal.ring()->nvars(), gb.lead_monomials(0), gb.is_everything());
}

std::vector<MonomialPrime> minimal_primes_monomial(const IdealPresentation& ideal) {
  std::vector<std::uint64_t> supports;
  for (const auto& g : ideal.generators()) {
    if (!g.is_monomial()) throw UnsupportedInput("non-monomial generator " + g.to_string());
    if (ideal.ring()->nvars() > 64) throw UnsupportedInput("monomial primes limited to 64 variables");
    std::uint64_t s = g.lead_monomial().support();
    if (s == 0) return {};
    supports.push_back(s);
  }
  std::set<std::uint64_t> covers;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t chosen) {
    for (auto s : supports) {
      if (s & chosen) continue;
      for (std::uint64_t rest = s; rest; rest &= rest - 1) rec(chosen | (rest & (~rest + 1)));
      return;
    }
    covers.insert(chosen);
  };
  rec(0);
  std::vector<MonomialPrime> out;
  for (auto c : covers) {
    bool minimal = std::none_of(covers.begin(), covers.end(), [c](std::uint64_t o) { return o != c && (o & ~c) == 0; });
    if (minimal) out.push_back({c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_submodule(RingPtr ring, std::size_t rank, const std::vector<VectorPoly>& a, const std::vector<VectorPoly>& b) {
  auto ga = GroebnerBasis::compute(ring, rank, a);
  auto gb = GroebnerBasis::compute(ring, rank, b);
  return std::all_of(b.begin(), b.end(), [&](const VectorPoly& v) { return ga.contains(v); }) &&
         std::all_of(a.begin(), a.end(), [&](const VectorPoly& v) { return gb.contains(v); });
}

bool same_ideal(const IdealPresentation& a, const IdealPresentation& b) {
  auto ga = GroebnerBasis::compute(a);
  auto gb = GroebnerBasis::compute(b);
  return std::all_of(b.generators().begin(), b.generators().end(), [&](const Polynomial& f) { return ga.contains(f); }) &&
         std::all_of(a.generators().begin(), a.generators().end(), [&](const Polynomial& f) { return gb.contains(f); });
}

bool in_radical(const Polynomial& f, const IdealPresentation& ideal) {
  if (f.is_zero()) return true;
  const auto& ring = *ideal.ring();
  std::vector<std::string> vars = ring.variables();
  std::string t = "t";
  while (ring.index_of(t) >= 0) t += "_";
  vars.push_back(t);
  auto big = make_ring(vars, ring.field(), MonomialOrder::grevlex());
  std::vector<std::size_t> map(ring.nvars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.map_to(big, map));
  gens.push_back(Polynomial::constant(big, 1) - Polynomial::variable(big, ring.nvars()) * f.map_to(big, map));
  return GroebnerBasis::compute(IdealPresentation(big, gens)).is_everything();
}

}  // namespace dgk

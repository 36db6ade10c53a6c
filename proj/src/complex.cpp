#include "dgk/complex.hpp"

#include <algorithm>
#include <map>

#include "dgk/errors.hpp"
#include "dgk/subsets.hpp"

namespace dgk {

// ---------------------------------------------------------------------------
// ModulePresentation

ModulePresentation::ModulePresentation(RingPtr ring, std::size_t generators, PolyMatrix relations)
    : ring_(std::move(ring)), generators_(generators), relations_(std::move(relations)) {
  if (relations_.rows() != generators_) {
    if (relations_.cols() == 0) relations_ = PolyMatrix(ring_, generators_, 0);
    else throw StructuralError("relation matrix row count differs from generator count");
  }
}

ModulePresentation ModulePresentation::free(RingPtr ring, std::size_t rank) {
  return ModulePresentation(ring, rank, PolyMatrix(ring, rank, 0));
}

ModulePresentation ModulePresentation::cyclic(const IdealPresentation& ideal) {
  PolyMatrix rel(ideal.ring(), 1, ideal.generators().size());
  for (std::size_t j = 0; j < ideal.generators().size(); ++j) rel.at(0, j) = ideal.generators()[j];
  return ModulePresentation(ideal.ring(), 1, std::move(rel));
}

ModulePresentation ModulePresentation::pruned() const {
  const auto& field = ring_->field();
  std::vector<VectorPoly> cols;
  for (auto& c : relations_.columns())
    if (!c.is_zero()) cols.push_back(std::move(c));
  std::vector<std::size_t> alive(generators_);
  for (std::size_t i = 0; i < generators_; ++i) alive[i] = i;
  // cols are indexed by original generator positions; `alive` lists survivors.
  while (true) {
    std::size_t best_c = SIZE_MAX, best_r = SIZE_MAX, best_weight = SIZE_MAX;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      std::size_t weight = 0;
      for (auto r : alive) weight += cols[c][r].is_zero() ? 0 : 1;
      for (auto r : alive) {
        const auto& e = cols[c][r];
        if (!e.is_zero() && e.is_constant() && weight < best_weight) {
          best_c = c;
          best_r = r;
          best_weight = weight;
          break;
        }
      }
    }
    if (best_c == SIZE_MAX) break;
    VectorPoly pivot = cols[best_c];
    FieldElement inv = field.inv(pivot[best_r].constant_term());
    cols.erase(cols.begin() + static_cast<long>(best_c));
    for (auto& c : cols) {
      if (c[best_r].is_zero()) continue;
      Polynomial factor = c[best_r].scaled(inv);
      c = c - pivot * factor;
    }
    alive.erase(std::find(alive.begin(), alive.end(), best_r));
    std::erase_if(cols, [&](const VectorPoly& c) {
      return std::all_of(alive.begin(), alive.end(), [&](std::size_t r) { return c[r].is_zero(); });
    });
  }
  // Drop duplicate relations.
  std::vector<VectorPoly> uniq;
  for (auto& c : cols) {
    std::vector<Polynomial> coords;
    for (auto r : alive) coords.push_back(c[r]);
    VectorPoly v(ring_, std::move(coords));
    if (std::none_of(uniq.begin(), uniq.end(), [&](const VectorPoly& u) { return u == v; })) uniq.push_back(std::move(v));
  }
  return ModulePresentation(ring_, alive.size(), PolyMatrix::from_columns(ring_, alive.size(), uniq));
}

ModulePresentation ModulePresentation::quotient_by(const std::vector<Polynomial>& elems) const {
  std::vector<VectorPoly> cols = relations_.columns();
  for (const auto& x : elems) {
    if (x.is_zero()) continue;
    for (std::size_t r = 0; r < generators_; ++r) {
      VectorPoly v(ring_, generators_);
      v[r] = x;
      cols.push_back(std::move(v));
    }
  }
  return ModulePresentation(ring_, generators_, PolyMatrix::from_columns(ring_, generators_, cols));
}

bool ModulePresentation::is_zero() const {
  if (generators_ == 0) return true;
  return GroebnerBasis::compute(ring_, generators_, relations_.columns()).is_everything();
}

// ---------------------------------------------------------------------------
// FreeComplex

FreeComplex::FreeComplex(RingPtr ring, int lo, std::vector<std::size_t> ranks, std::vector<PolyMatrix> differentials)
    : ring_(std::move(ring)), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(differentials)) {
  if (ranks_.empty()) ranks_.push_back(0);
  if (diffs_.size() + 1 != ranks_.size())
    throw StructuralError("expected " + std::to_string(ranks_.size() - 1) + " differentials, got " +
                          std::to_string(diffs_.size()));
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    const auto& d = diffs_[k];
    int deg = lo_ + static_cast<int>(k) + 1;
    if (d.rows() != ranks_[k] || d.cols() != ranks_[k + 1])
      throw StructuralError("differential d_" + std::to_string(deg) + " has shape " + std::to_string(d.rows()) + "x" +
                            std::to_string(d.cols()) + ", expected " + std::to_string(ranks_[k]) + "x" +
                            std::to_string(ranks_[k + 1]));
    if (d.ring() && !same_ring(d.ring(), ring_)) throw StructuralError("differential over a different ring");
  }
}

FreeComplex FreeComplex::concentrated(RingPtr ring, int degree, std::size_t rank) {
  return FreeComplex(std::move(ring), degree, {rank}, {});
}

std::size_t FreeComplex::rank(int i) const {
  if (i < lo_ || i > hi()) return 0;
  return ranks_[static_cast<std::size_t>(i - lo_)];
}

PolyMatrix FreeComplex::differential(int i) const {
  if (i <= lo_ || i > hi()) return PolyMatrix(ring_, rank(i - 1), rank(i));
  return diffs_[static_cast<std::size_t>(i - lo_ - 1)];
}

FreeComplex FreeComplex::shifted(int k) const {
  std::vector<PolyMatrix> d = diffs_;
  if (k % 2 != 0)
    for (auto& m : d) m = m.scaled(ring_->field().neg(ring_->field().one()));
  return FreeComplex(ring_, lo_ + k, ranks_, std::move(d));
}

std::optional<ComplexViolation> validate_complex(const FreeComplex& x) {
  for (int i = x.lo() + 1; i < x.hi(); ++i) {
    PolyMatrix comp = x.differential(i) * x.differential(i + 1);
    for (std::size_t r = 0; r < comp.rows(); ++r)
      for (std::size_t c = 0; c < comp.cols(); ++c)
        if (!comp.at(r, c).is_zero()) return ComplexViolation{i, r + 1, c + 1, comp.at(r, c)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Homology

ModulePresentation homology(const FreeComplex& x, int i) {
  const auto& ring = x.ring();
  if (i < x.lo() || i > x.hi() || x.rank(i) == 0) return ModulePresentation::free(ring, 0);
  PolyMatrix kernel = x.rank(i - 1) == 0 ? PolyMatrix::identity(ring, x.rank(i)) : syzygies(x.differential(i));
  ColumnSpan span(kernel);
  PolyMatrix image = x.differential(i + 1);
  std::vector<VectorPoly> rel;
  for (std::size_t c = 0; c < image.cols(); ++c) {
    auto lifted = span.lift(image.column(c));
    if (!lifted) throw StructuralError("image of d_" + std::to_string(i + 1) + " is not inside ker d_" + std::to_string(i));
    rel.push_back(std::move(*lifted));
  }
  PolyMatrix lifts = PolyMatrix::from_columns(ring, kernel.cols(), rel);
  return ModulePresentation(ring, kernel.cols(), lifts.concat_columns(span.syzygies()));
}

namespace {

// All g x g minors of a g x m matrix by row-by-row Laplace expansion over
// column subsets.
std::vector<Polynomial> maximal_minors(const RingPtr& ring, const PolyMatrix& a) {
  const std::size_t g = a.rows(), m = a.cols();
  if (m > 63) throw UnsupportedInput("too many relations for Fitting ideal computation");
  std::map<std::uint64_t, Polynomial> level{{0, Polynomial::constant(ring, 1)}};
  for (std::size_t k = 0; k < g; ++k) {
    std::map<std::uint64_t, Polynomial> next;
    for (const auto& [mask, det] : level) {
      if (det.is_zero()) continue;
      for (std::size_t c = 0; c < m; ++c) {
        std::uint64_t bit = std::uint64_t{1} << c;
        if (mask & bit) continue;
        const Polynomial& e = a.at(k, c);
        if (e.is_zero()) continue;
        // Column c is appended as the k-th row's pick; its sign is the number
        // of chosen columns to its right.
        int sign_swaps = __builtin_popcountll(mask >> c);
        Polynomial term = e * det;
        if (sign_swaps & 1) term = -term;
        auto [it, fresh] = next.try_emplace(mask | bit, Polynomial(ring));
        it->second += term;
      }
    }
    level = std::move(next);
  }
  std::vector<Polynomial> out;
  for (auto& [mask, det] : level)
    if (!det.is_zero()) out.push_back(det);
  return out;
}

}  // namespace

IdealPresentation fitting_support(const ModulePresentation& m) {
  ModulePresentation p = m.pruned();
  if (p.generators() == 0) return IdealPresentation::unit(m.ring());
  if (p.relations().cols() < p.generators()) return IdealPresentation::zero(m.ring());
  return IdealPresentation(m.ring(), maximal_minors(m.ring(), p.relations()));
}

ExtInt module_dim(const ModulePresentation& m) {
  long d = ideal_dimension(fitting_support(m));
  return d < 0 ? ExtInt::neg_inf() : ExtInt(d);
}

bool is_finite_length(const ModulePresentation& m) { return module_dim(m) <= ExtInt(0); }

HomologyTable::HomologyTable(const FreeComplex& x) : ring_(x.ring()), lo_(x.lo()) {
  for (int i = x.lo(); i <= x.hi(); ++i) {
    HomologyEntry e;
    e.degree = i;
    e.module = homology(x, i).pruned();
    e.fitting = fitting_support(e.module);
    e.fitting_basis = GroebnerBasis::compute(e.fitting);
    long d = dimension_from_leads(ring_->nvars(), e.fitting_basis.lead_monomials(0), e.fitting_basis.is_everything());
    e.dim = d < 0 ? ExtInt::neg_inf() : ExtInt(d);
    entries_.push_back(std::move(e));
  }
}

ExtInt complex_inf(const HomologyTable& h) {
  for (const auto& e : h.entries())
    if (!e.is_zero()) return ExtInt(e.degree);
  return ExtInt::pos_inf();
}

ExtInt complex_inf(const FreeComplex& x) {
  for (int i = x.lo(); i <= x.hi(); ++i)
    if (!homology(x, i).is_zero()) return ExtInt(i);
  return ExtInt::pos_inf();
}

// ---------------------------------------------------------------------------
// Koszul tensor

FreeComplex tensor_with_koszul(const FreeComplex& x, const std::vector<Polynomial>& seq) {
  if (seq.empty()) return x;
  const auto& ring = x.ring();
  for (const auto& f : seq)
    if (f.ring() && !same_ring(f.ring(), ring)) throw StructuralError("sequence element from a different ring");
  const unsigned s = static_cast<unsigned>(seq.size());
  if (s > 20) throw UnsupportedInput("Koszul sequence too long");
  std::vector<std::vector<Subset>> subsets(s + 1);
  for (unsigned p = 0; p <= s; ++p) subsets[p] = subsets_of_size(s, p);

  // Basis of total degree m: blocks (p, q = m - p) in increasing p.
  struct Block {
    unsigned p;
    int q;
    std::size_t offset;
  };
  const int lo = x.lo(), hi = x.hi() + static_cast<int>(s);
  std::vector<std::vector<Block>> blocks;
  std::vector<std::size_t> ranks;
  for (int m = lo; m <= hi; ++m) {
    std::vector<Block> bl;
    std::size_t off = 0;
    for (unsigned p = 0; p <= s; ++p) {
      int q = m - static_cast<int>(p);
      if (q < x.lo() || q > x.hi() || x.rank(q) == 0) continue;
      bl.push_back({p, q, off});
      off += subsets[p].size() * x.rank(q);
    }
    blocks.push_back(std::move(bl));
    ranks.push_back(off);
  }
  auto find_offset = [&](int m, unsigned p) -> std::optional<std::size_t> {
    if (m < lo || m > hi) return std::nullopt;
    for (const auto& b : blocks[static_cast<std::size_t>(m - lo)])
      if (b.p == p) return b.offset;
    return std::nullopt;
  };
  auto subset_index = [&](unsigned p, Subset sub) {
    const auto& v = subsets[p];
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), sub, subset_less) - v.begin());
  };

  std::vector<PolyMatrix> diffs;
  for (int m = lo + 1; m <= hi; ++m) {
    PolyMatrix d(ring, ranks[static_cast<std::size_t>(m - 1 - lo)], ranks[static_cast<std::size_t>(m - lo)]);
    for (const auto& b : blocks[static_cast<std::size_t>(m - lo)]) {
      const std::size_t rq = x.rank(b.q);
      PolyMatrix dx = x.differential(b.q);
      for (std::size_t si = 0; si < subsets[b.p].size(); ++si) {
        Subset sub = subsets[b.p][si];
        for (std::size_t v = 0; v < rq; ++v) {
          std::size_t col = b.offset + si * rq + v;
          // Koszul part: d(e_S) (x) v, landing in block (p-1, q).
          if (b.p > 0) {
            if (auto off = find_offset(m - 1, b.p - 1)) {
              for (Subset rest = sub; rest; rest &= rest - 1) {
                unsigned idx = static_cast<unsigned>(__builtin_ctz(rest));
                Subset smaller = sub & ~(Subset{1} << idx);
                std::size_t row = *off + subset_index(b.p - 1, smaller) * rq + v;
                Polynomial coef = seq[idx];
                if (position_in(sub, idx) & 1) coef = -coef;
                d.at(row, col) += coef;
              }
            }
          }
          // Complex part: (-1)^p e_S (x) d(v), landing in block (p, q-1).
          if (b.q - 1 >= x.lo()) {
            if (auto off = find_offset(m - 1, b.p)) {
              const std::size_t rq1 = x.rank(b.q - 1);
              for (std::size_t a = 0; a < rq1; ++a) {
                const Polynomial& e = dx.at(a, v);
                if (e.is_zero()) continue;
                std::size_t row = *off + si * rq1 + a;
                d.at(row, col) += (b.p & 1) ? -e : e;
              }
            }
          }
        }
      }
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(ring, lo, std::move(ranks), std::move(diffs));
}

}  // namespace dgk

#include "dgk/matrix.hpp"

#include <algorithm>

#include "dgk/errors.hpp"

namespace dgk {

VectorPoly::VectorPoly(RingPtr ring, std::size_t rank) : ring_(ring), coords_(rank, Polynomial(ring)) {}

VectorPoly::VectorPoly(RingPtr ring, std::vector<Polynomial> coords) : ring_(std::move(ring)), coords_(std::move(coords)) {
  for (auto& c : coords_) {
    if (!c.ring()) c = Polynomial(ring_);
    else if (!same_ring(c.ring(), ring_)) throw StructuralError("vector coordinate from a different ring");
  }
}

VectorPoly VectorPoly::unit(RingPtr ring, std::size_t rank, std::size_t index) {
  VectorPoly v(ring, rank);
  v.coords_.at(index) = Polynomial::constant(ring, 1);
  return v;
}

bool VectorPoly::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

VectorPoly VectorPoly::operator+(const VectorPoly& o) const {
  if (rank() != o.rank()) throw StructuralError("vector rank mismatch");
  VectorPoly r(*this);
  for (std::size_t i = 0; i < rank(); ++i) r.coords_[i] = coords_[i] + o.coords_[i];
  return r;
}

VectorPoly VectorPoly::operator-(const VectorPoly& o) const {
  if (rank() != o.rank()) throw StructuralError("vector rank mismatch");
  VectorPoly r(*this);
  for (std::size_t i = 0; i < rank(); ++i) r.coords_[i] = coords_[i] - o.coords_[i];
  return r;
}

VectorPoly VectorPoly::operator*(const Polynomial& c) const {
  VectorPoly r(*this);
  for (auto& x : r.coords_) x = x * c;
  return r;
}

bool VectorPoly::operator==(const VectorPoly& o) const {
  if (rank() != o.rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (!(coords_[i] == o.coords_[i])) return false;
  return true;
}

std::string VectorPoly::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ", " : "") + coords_[i].to_string();
  return s + ")";
}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring)) {}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(ring, 1);
  return m;
}

PolyMatrix PolyMatrix::from_columns(RingPtr ring, std::size_t rows, const std::vector<VectorPoly>& cols) {
  PolyMatrix m(ring, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].rank() != rows) throw StructuralError("column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

VectorPoly PolyMatrix::column(std::size_t c) const {
  std::vector<Polynomial> v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return VectorPoly(ring_, std::move(v));
}

std::vector<VectorPoly> PolyMatrix::columns() const {
  std::vector<VectorPoly> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw StructuralError("matrix shape mismatch");
  if (!same_ring(ring_, o.ring_)) throw StructuralError("matrices over different rings");
  PolyMatrix r(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Polynomial acc(ring_);
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
        acc += at(i, k) * o.at(k, j);
      }
      r.at(i, j) = std::move(acc);
    }
  return r;
}

VectorPoly PolyMatrix::apply(const VectorPoly& v) const {
  if (v.rank() != cols_) throw StructuralError("vector length does not match matrix");
  VectorPoly r(ring_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!at(i, k).is_zero() && !v[k].is_zero()) r[i] += at(i, k) * v[k];
  return r;
}

PolyMatrix PolyMatrix::scaled(const FieldElement& c) const {
  PolyMatrix r(*this);
  for (auto& p : r.data_) p = p.scaled(c);
  return r;
}

PolyMatrix PolyMatrix::concat_columns(const PolyMatrix& o) const {
  if (rows_ != o.rows_) throw StructuralError("row count mismatch");
  PolyMatrix r(ring_ ? ring_ : o.ring_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

}  // namespace dgk

#pragma once

#include <string>
#include <vector>

#include "dgk/polynomial.hpp"

namespace dgk {

/// Element of the free module R^r, as r coordinates.
class VectorPoly {
 public:
  VectorPoly() = default;
  VectorPoly(RingPtr ring, std::size_t rank);
  VectorPoly(RingPtr ring, std::vector<Polynomial> coords);
  static VectorPoly unit(RingPtr ring, std::size_t rank, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return coords_.size(); }
  const Polynomial& operator[](std::size_t i) const { return coords_[i]; }
  Polynomial& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Polynomial>& coords() const { return coords_; }

  bool is_zero() const;
  VectorPoly operator+(const VectorPoly& o) const;
  VectorPoly operator-(const VectorPoly& o) const;
  VectorPoly operator*(const Polynomial& c) const;
  bool operator==(const VectorPoly& o) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> coords_;
};

/// Dense matrix of polynomials, row-major. Columns are images of basis
/// vectors, so a rows x cols matrix is a map R^cols -> R^rows.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(RingPtr ring, std::size_t n);
  /// All columns must have `rows` coordinates.
  static PolyMatrix from_columns(RingPtr ring, std::size_t rows, const std::vector<VectorPoly>& cols);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Polynomial& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  VectorPoly column(std::size_t c) const;
  std::vector<VectorPoly> columns() const;
  bool is_zero() const;
  /// Throws StructuralError on shape or ring mismatch.
  PolyMatrix operator*(const PolyMatrix& o) const;
  VectorPoly apply(const VectorPoly& v) const;
  PolyMatrix scaled(const FieldElement& c) const;
  /// Columns of this followed by columns of `o`.
  PolyMatrix concat_columns(const PolyMatrix& o) const;

  bool operator==(const PolyMatrix& o) const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> data_;
};

}  // namespace dgk

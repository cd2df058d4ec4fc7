#pragma once

// Dense matrices over a Field with exact Gaussian elimination.

#include <cstddef>
#include <vector>

#include "glcd/field.hpp"

namespace glcd {

class Matrix {
 public:
  using index_type = Field::index_type;

  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_elements(const Field& field, const std::vector<std::vector<Element>>& rows, std::size_t cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  index_type at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  index_type& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Element element(std::size_t i, std::size_t j) const { return field_.from_index(at(i, j)); }
  const index_type* row(std::size_t i) const { return a_.data() + i * cols_; }

  Matrix transpose() const;
  /// Entrywise p^j power.
  Matrix frobenius(unsigned j) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  /// [top; bottom]
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  /// Columns in `cols` order.
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Determinant of a square matrix.
  Element det() const;
  /// Basis (as rows) of {x : M x^T = 0}.
  Matrix nullspace() const;
  /// Row space basis in reduced echelon form with zero rows dropped.
  Matrix row_basis() const;
  /// x M for a row vector x.
  std::vector<index_type> left_multiply(const std::vector<index_type>& x) const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<index_type> a_;
};

/// Row spaces coincide.
bool same_row_space(const Matrix& a, const Matrix& b);

/// dim(rowspace(a) ∩ rowspace(b)).
std::size_t intersection_dimension(const Matrix& a, const Matrix& b);

}  // namespace glcd

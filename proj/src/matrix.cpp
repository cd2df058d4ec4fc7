#include "glcd/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace glcd {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_elements(const Field& field, const std::vector<std::vector<Element>>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!(rows[i][j].field() == field)) throw std::invalid_argument("matrix entry from a different field");
      m.at(i, j) = rows[i][j].index();
    }
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::frobenius(unsigned j) const {
  Matrix out = *this;
  for (auto& v : out.a_) v = field_.frobenius(v, j);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) throw std::invalid_argument("matrices over different fields");
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix c(a.field_, a.rows_, b.cols_);
  FieldKernel(a.field_).visit([&](const auto& f) {
    for (std::size_t i = 0; i < a.rows_; ++i) {
      auto* ci = &c.a_[i * c.cols_];
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto aik = a.a_[i * a.cols_ + k];
        if (aik == 0) continue;
        const auto* bk = &b.a_[k * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (bk[j] != 0) ci[j] = f.add(ci[j], f.mul(aik, bk[j]));
      }
    }
  });
  return c;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (!(top.field_ == bottom.field_)) throw std::invalid_argument("matrices over different fields");
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("column count mismatch");
  Matrix m(top.field_, top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.a_.begin(), top.a_.end(), m.a_.begin());
  std::copy(bottom.a_.begin(), bottom.a_.end(), m.a_.begin() + static_cast<std::ptrdiff_t>(top.a_.size()));
  return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix m(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m.at(i, j) = at(i, cols[j]);
  return m;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw std::out_of_range("row block out of range");
  Matrix m(field_, count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(first + i, j);
  return m;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  FieldKernel(field_).visit([&](const auto& f) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && a_[piv * cols_ + c] == 0) ++piv;
      if (piv == rows_) continue;
      auto* pr = &a_[r * cols_];
      if (piv != r) std::swap_ranges(pr, pr + cols_, &a_[piv * cols_]);
      const auto inv = f.inv(pr[c]);
      for (std::size_t j = c; j < cols_; ++j) pr[j] = f.mul(pr[j], inv);
      for (std::size_t i = 0; i < rows_; ++i) {
        auto* pi = &a_[i * cols_];
        if (i == r || pi[c] == 0) continue;
        const auto factor = f.neg(pi[c]);
        for (std::size_t j = c; j < cols_; ++j)
          if (pr[j] != 0) pi[j] = f.add(pi[j], f.mul(factor, pr[j]));
      }
      pivots.push_back(c);
      ++r;
    }
  });
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref().size();
}

Element Matrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix m = *this;
  const index_type d = FieldKernel(field_).visit([&](const auto& f) -> index_type {
    index_type d = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t piv = c;
      while (piv < rows_ && m.a_[piv * cols_ + c] == 0) ++piv;
      if (piv == rows_) return 0;
      auto* pc = &m.a_[c * cols_];
      if (piv != c) {
        std::swap_ranges(pc, pc + cols_, &m.a_[piv * cols_]);
        d = f.neg(d);
      }
      d = f.mul(d, pc[c]);
      const auto inv = f.inv(pc[c]);
      for (std::size_t i = c + 1; i < rows_; ++i) {
        auto* pi = &m.a_[i * cols_];
        if (pi[c] == 0) continue;
        const auto factor = f.neg(f.mul(pi[c], inv));
        for (std::size_t j = c; j < cols_; ++j)
          if (pc[j] != 0) pi[j] = f.add(pi[j], f.mul(factor, pc[j]));
      }
    }
    return d;
  });
  return field_.from_index(d);
}

Matrix Matrix::nullspace() const {
  const Field& f = field_;
  Matrix m = *this;
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(f, cols_ - pivots.size(), cols_);
  std::size_t row = 0;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    basis.at(row, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.at(row, pivots[i]) = f.neg(m.at(i, free));
    ++row;
  }
  return basis;
}

Matrix Matrix::row_basis() const {
  Matrix m = *this;
  const auto rank = m.rref().size();
  return m.row_block(0, rank);
}

std::vector<Matrix::index_type> Matrix::left_multiply(const std::vector<index_type>& x) const {
  if (x.size() != rows_) throw std::invalid_argument("vector length mismatch");
  std::vector<index_type> out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) out[j] = field_.add(out[j], field_.mul(x[i], at(i, j)));
  }
  return out;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
  const auto ra = a.rank();
  return ra == b.rank() && Matrix::vstack(a, b).rank() == ra;
}

std::size_t intersection_dimension(const Matrix& a, const Matrix& b) {
  return a.rank() + b.rank() - Matrix::vstack(a, b).rank();
}

}  // namespace glcd

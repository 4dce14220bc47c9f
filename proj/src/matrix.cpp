#include "cpt/matrix.hpp"

#include <algorithm>
#include <utility>

#include "cpt/error.hpp"

namespace cpt {

Scalar inner(std::span<const Scalar> u, std::span<const Scalar> v) {
  if (u.size() != v.size()) throw DimensionMismatch("inner product of vectors of different length");
  Scalar acc;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero() || v[i].is_zero()) continue;
    acc += u[i].conj() * v[i];
  }
  return acc;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector unit_vector(std::size_t n, std::size_t index) {
  Vector v(n);
  v.at(index) = Scalar(1);
  return v;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c).conj();
  }
  return m;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of non-square matrix");
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const { return cpt::is_zero(data_); }

bool Matrix::is_hermitian() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r).conj()) return false;
    }
  }
  return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix Matrix::scaled(const Scalar& factor) const {
  Matrix m = *this;
  if (factor.is_one()) return m;
  for (auto& x : m.data_) {
    if (!x.is_zero()) x *= factor;
  }
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix m(a.rows_, b.cols_);
  // i-k-j order lets zero entries of `a` skip a whole row of work; projections
  // onto coordinate-aligned subspaces are mostly zeros.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        m(i, j) += aik * bkj;
      }
    }
  }
  return m;
}

Vector operator*(const Matrix& a, std::span<const Scalar> v) {
  if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero() || v[k].is_zero()) continue;
      out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::stacked(const Matrix& other) const {
  if (cols_ != other.cols_) throw DimensionMismatch("stacking matrices with different column counts");
  Matrix m(rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

Matrix Matrix::joined(const Matrix& other) const {
  if (rows_ != other.rows_) throw DimensionMismatch("joining matrices with different row counts");
  Matrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

Matrix::Echelon Matrix::rref() const {
  Echelon e{*this, {}};
  Matrix& m = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m(pivot, c), m(row, c));
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < cols_; ++c) {
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < cols_; ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t Matrix::rank() const { return rref().pivots.size(); }

std::vector<Vector> Matrix::kernel_basis() const {
  const Echelon e = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols_);
    v[free] = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> Matrix::column_basis() const {
  std::vector<Vector> basis;
  for (auto p : rref().pivots) basis.push_back(column(p));
  return basis;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw InvalidArgument("inverse of non-square matrix");
  if (rows_ == 0) return {};
  const Echelon e = joined(identity(rows_)).rref();
  if (e.pivots.size() < rows_ || e.pivots[rows_ - 1] != rows_ - 1) {
    throw InvalidArgument("inverse of singular matrix");
  }
  Matrix inv(rows_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < rows_; ++c) inv(r, c) = e.reduced(r, rows_ + c);
  }
  return inv;
}

bool commute(const Matrix& a, const Matrix& b) { return a * b == b * a; }

bool product_is_zero(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      if (!acc.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace cpt

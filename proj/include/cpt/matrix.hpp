#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cpt/scalar.hpp"

namespace cpt {

using Vector = std::vector<Scalar>;

/// Hermitian form <u, v> = sum conj(u_i) v_i.
Scalar inner(std::span<const Scalar> u, std::span<const Scalar> v);
bool is_zero(std::span<const Scalar> v);
Vector unit_vector(std::size_t n, std::size_t index);

/// Dense row-major matrix over Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Scalar> entries);
  /// Columns given as vectors of equal length `rows`.
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);
  static Matrix from_rows(std::span<const Vector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;

  Matrix adjoint() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_hermitian() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix scaled(const Scalar& factor) const;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, std::span<const Scalar> v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Stacks `other` below this matrix.
  Matrix stacked(const Matrix& other) const;
  /// Places `other` to the right of this matrix.
  Matrix joined(const Matrix& other) const;

  struct Echelon;
  /// Gauss-Jordan elimination, pivoting on the first nonzero entry.
  Echelon rref() const;
  std::size_t rank() const;
  /// Basis of {x : A x = 0}; one vector per free column, in column order.
  std::vector<Vector> kernel_basis() const;
  /// Pivot columns of the original matrix (a basis of the column space).
  std::vector<Vector> column_basis() const;
  /// Throws InvalidArgument if singular or not square.
  Matrix inverse() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Matrix::Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// True iff A*B == B*A, without materializing either product twice.
bool commute(const Matrix& a, const Matrix& b);
/// True iff A*B == 0; stops at the first nonzero entry.
bool product_is_zero(const Matrix& a, const Matrix& b);

}  // namespace cpt

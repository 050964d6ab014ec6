#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "koszul/scalar.hpp"

namespace koszul {

using Vector = std::vector<Scalar>;

/// Dense exact matrix, row-major. Zero-sized shapes are valid and handled uniformly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  /// Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const;
  Matrix row_block(std::size_t first, std::size_t count) const;

  bool is_zero() const;
  std::size_t nonzeros() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

bool is_zero(const Vector& v);
Vector scaled(const Scalar& s, const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector unit_vector(std::size_t n, std::size_t i);

/// Reduced row echelon form. Pivots are taken column by column, choosing the first
/// nonzero entry at or below the current row, so the result is the unique RREF.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Only the first `pivot_limit` columns are eligible as pivots; later columns are
/// carried along (augmented blocks).
Echelon row_reduce(Matrix m, std::optional<std::size_t> pivot_limit = std::nullopt);

std::size_t rank(const Matrix& m);

/// Basis of the null space as columns, one per free column of the RREF, in column order.
Matrix nullspace(const Matrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
Scalar determinant(const Matrix& m);

/// Solves for coordinates with respect to a set of linearly independent columns.
class ColumnSpanSolver {
 public:
  ColumnSpanSolver() = default;
  /// Throws Error("DependentVectors") if the columns are not independent.
  explicit ColumnSpanSolver(Matrix basis);

  std::size_t ambient_dim() const noexcept { return basis_.rows(); }
  std::size_t size() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }

  /// Coordinates x with basis * x == v, or nullopt when v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const;
  bool contains(const Vector& v) const { return coordinates(v).has_value(); }

  /// Coordinates of every column of m; nullopt if any column leaves the span.
  std::optional<Matrix> coordinates(const Matrix& m) const;

 private:
  Matrix basis_;
  Matrix left_inverse_;
};

/// Result of A x = b: either some solution, or a certificate y with y^T A = 0 and y^T b != 0.
struct AffineSolution {
  std::optional<Vector> solution;
  Vector certificate;
};

/// The returned solution sets every free variable to zero.
AffineSolution solve_affine(const Matrix& a, const Vector& b);

}  // namespace koszul

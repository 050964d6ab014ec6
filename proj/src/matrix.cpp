#include "koszul/matrix.hpp"

#include <utility>

#include "koszul/error.hpp"

namespace koszul {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw input_error("DimensionMismatch", "row length differs from column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
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

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw input_error("DimensionMismatch", "column length differs from row count");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
  Matrix m(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) m(r, c) = (*this)(r, first + c);
  return m;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  Matrix m(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(first + r, c);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!koszul::is_zero(x)) return false;
  return true;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : data_)
    if (!koszul::is_zero(x)) ++n;
  return n;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw internal_error("DimensionMismatch", "matrix product shapes do not chain");
  Matrix out(a.rows(), b.cols());
  Scalar tmp;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (is_zero(bkj)) continue;
        tmp = aik * bkj;
        out(i, j) += tmp;
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw internal_error("DimensionMismatch", "matrix-vector shapes do not chain");
  Vector out(a.rows());
  Scalar tmp;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k)) || is_zero(v[k])) continue;
      tmp = a(i, k) * v[k];
      out[i] += tmp;
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw internal_error("DimensionMismatch", "matrix sum shapes differ");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Scalar(-1) * b; }

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw internal_error("DimensionMismatch", "hstack row counts differ");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw internal_error("DimensionMismatch", "vstack column counts differ");
  Matrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) out(a.rows() + i, j) = b(i, j);
  }
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

Vector scaled(const Scalar& s, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x *= s;
  return out;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw internal_error("DimensionMismatch", "vector sum lengths differ");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector subtract(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw internal_error("DimensionMismatch", "vector difference lengths differ");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

Echelon row_reduce(Matrix m, std::optional<std::size_t> pivot_limit) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t limit = pivot_limit ? std::min(*pivot_limit, cols) : cols;
  Echelon result;
  std::size_t row = 0;
  std::vector<std::size_t> support;
  Scalar tmp;
  for (std::size_t col = 0; col < limit && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && is_zero(m(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(row, j));

    const Scalar inv = 1 / m(row, col);
    support.clear();
    for (std::size_t j = col; j < cols; ++j) {
      if (is_zero(m(row, j))) continue;
      m(row, j) *= inv;
      support.push_back(j);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col);
      for (std::size_t j : support) {
        tmp = factor * m(row, j);
        m(r, j) -= tmp;
      }
    }
    result.pivot_columns.push_back(col);
    ++row;
  }
  result.reduced = std::move(m);
  return result;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

Matrix nullspace(const Matrix& m) {
  const Echelon e = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivot_columns[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(n, basis);
}

Scalar determinant(const Matrix& input) {
  if (input.rows() != input.cols()) throw internal_error("DimensionMismatch", "determinant of a non-square matrix");
  Matrix m = input;
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Scalar sign = 1;
  Scalar previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t swap = k + 1;
      while (swap < n && is_zero(m(swap, k))) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

ColumnSpanSolver::ColumnSpanSolver(Matrix basis) : basis_(std::move(basis)) {
  const std::size_t n = basis_.rows();
  const std::size_t r = basis_.cols();
  const Echelon e = row_reduce(hstack(basis_, Matrix::identity(n)), r);
  if (e.rank() != r) throw validation_error("DependentVectors", "basis columns are linearly dependent");
  left_inverse_ = Matrix(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) left_inverse_(i, j) = e.reduced(i, r + j);
}

std::optional<Vector> ColumnSpanSolver::coordinates(const Vector& v) const {
  if (v.size() != basis_.rows()) throw internal_error("DimensionMismatch", "vector length differs from solver ambient dimension");
  Vector x = left_inverse_ * v;
  if (basis_ * x != v) return std::nullopt;
  return x;
}

std::optional<Matrix> ColumnSpanSolver::coordinates(const Matrix& m) const {
  Matrix out(size(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto x = coordinates(m.column(c));
    if (!x) return std::nullopt;
    out.set_column(c, *x);
  }
  return out;
}

AffineSolution solve_affine(const Matrix& a, const Vector& b) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Matrix rhs(rows, 1);
  rhs.set_column(0, b);
  const Echelon e = row_reduce(hstack(hstack(a, rhs), Matrix::identity(rows)), cols);
  AffineSolution out;
  for (std::size_t r = e.rank(); r < rows; ++r) {
    if (!is_zero(e.reduced(r, cols))) {
      out.certificate.resize(rows);
      for (std::size_t j = 0; j < rows; ++j) out.certificate[j] = e.reduced(r, cols + 1 + j);
      return out;
    }
  }
  Vector x(cols);
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivot_columns[r]] = e.reduced(r, cols);
  out.solution = std::move(x);
  return out;
}

}  // namespace koszul

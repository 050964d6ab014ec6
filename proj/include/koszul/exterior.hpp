#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "koszul/lie_algebra.hpp"
#include "koszul/matrix.hpp"

namespace koszul {

/// Largest ambient dimension supported by the exterior bases (indices live in a 64-bit mask).
inline constexpr std::size_t kMaxExteriorDim = 64;

/// Strictly increasing tuple of basis indices i_1 < ... < i_k.
class MultiIndex {
 public:
  MultiIndex() = default;
  /// Throws Error("InvalidMultiIndex") unless strictly increasing and below kMaxExteriorDim.
  explicit MultiIndex(std::vector<std::size_t> indices);

  std::size_t degree() const noexcept { return indices_.size(); }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(std::size_t i) const noexcept { return i < 64 && ((mask_ >> i) & 1U); }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.indices_ == b.indices_; }
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.indices_ <=> b.indices_; }

 private:
  std::vector<std::size_t> indices_;
  std::uint64_t mask_ = 0;
};

/// Lexicographically ordered basis of the degree-k part of an exterior algebra on `dim` generators.
class ExteriorBasis {
 public:
  ExteriorBasis(std::size_t dim, std::size_t degree);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<MultiIndex>& elements() const noexcept { return elements_; }
  std::size_t index_of(const MultiIndex& m) const;
  std::size_t index_of_mask(std::uint64_t mask) const;

 private:
  std::size_t dim_;
  std::size_t degree_;
  std::vector<MultiIndex> elements_;
  std::map<std::uint64_t, std::size_t> position_;
};

/// Shared, immutable basis; safe to call concurrently.
const ExteriorBasis& exterior_basis(std::size_t dim, std::size_t degree);
std::size_t binomial(std::size_t n, std::size_t k);

/// Sorts `seq` in place and returns the sign of the sorting permutation, or 0 on a repeat.
int sort_sign(std::vector<std::size_t>& seq);

/// Element of the degree-k part of the exterior algebra on the dual of a dim-dimensional space.
/// Coefficients are values on basis k-tuples: a(e_{i1}, ..., e_{ik}) for i1 < ... < ik.
class Form {
 public:
  Form() = default;
  Form(std::size_t ambient_dim, std::size_t degree);

  static Form basis_form(std::size_t ambient_dim, const MultiIndex& index);
  /// The dual basis covector theta^i.
  static Form covector(std::size_t ambient_dim, std::size_t i);
  static Form from_vector(std::size_t ambient_dim, std::size_t degree, const Vector& coeffs);

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::map<MultiIndex, Scalar>& terms() const noexcept { return terms_; }

  Scalar coefficient(const MultiIndex& index) const;
  void add_term(const MultiIndex& index, const Scalar& value);
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficients in the lexicographic basis of exterior_basis(dim, degree).
  Vector to_vector() const;

  /// a(v_1, ..., v_k) for vectors of length ambient_dim.
  Scalar evaluate(const std::vector<Vector>& vectors) const;

  Form operator+(const Form& other) const;
  Form operator-(const Form& other) const;
  friend Form operator*(const Scalar& s, const Form& f);
  friend bool operator==(const Form&, const Form&) = default;

 private:
  void check_compatible(const Form& other) const;
  std::size_t dim_ = 0;
  std::size_t degree_ = 0;
  std::map<MultiIndex, Scalar> terms_;
};

/// Errors: DimensionMismatch.
Form wedge(const Form& a, const Form& b);
/// (i_x a)(v_2, ..., v_k) = a(x, v_2, ..., v_k); the interior of a 0-form is the zero form
/// of degree 0.
Form interior(const Vector& x, const Form& a);
/// (theta_x a)(v_1, ..., v_k) = -sum_i a(v_1, ..., [x, v_i], ..., v_k).
Form lie_derivative(const LieAlgebra& g, const Vector& x, const Form& a);
/// Pullback along a linear map given as a (dim W) x (dim V) matrix; a lives on W.
Form pullback(const Form& a, const Matrix& linear_map);

/// Matrix of i_x from degree k to degree k - 1 (0 x 1 for k = 0).
Matrix interior_matrix(const Vector& x, std::size_t degree);
/// Matrix of phi -> -sum_i phi(..., A v_i, ...) on degree k, for an endomorphism A.
Matrix derivation_matrix(const Matrix& endomorphism, std::size_t degree);
Matrix lie_derivative_matrix(const LieAlgebra& g, const Vector& x, std::size_t degree);

/// Chevalley-Eilenberg differential from degree k to k + 1:
///   (d phi)(v_1, ..., v_{k+1}) = sum_{i<j} (-1)^{i+j} phi([v_i, v_j], v_1, ..^i..^j.., v_{k+1}).
/// Only antisymmetry of the table is used, so it also applies to projected quotient brackets.
Matrix ce_differential(const BracketTable& table, std::size_t degree);
Matrix ce_differential(const LieAlgebra& g, std::size_t degree);

/// Matrix of the pullback from degree k on W to degree k on V (rows C(dim V, k), cols C(dim W, k)).
Matrix pullback_matrix(const Matrix& linear_map, std::size_t degree);

/// Plain signed sum over permutations, without 1/k! normalization:
///   Alt(m)(v_1, ..., v_k) = sum_sigma sgn(sigma) m(v_sigma(1), ..., v_sigma(k)).
/// `m` is evaluated on basis index tuples.
Form alternation(std::size_t ambient_dim, std::size_t degree,
                 const std::function<Scalar(std::span<const std::size_t>)>& multilinear);
/// Same, for a multilinear map given by its values on basis tuples (missing tuples are zero).
Form alternation(std::size_t ambient_dim, std::size_t degree, const std::map<std::vector<std::size_t>, Scalar>& table);

/// Wedge of two coefficient vectors in the lexicographic bases of degrees p and q.
Vector wedge_vectors(std::size_t ambient_dim, std::size_t p, const Vector& a, std::size_t q, const Vector& b);

}  // namespace koszul

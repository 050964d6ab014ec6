#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "koszul/lie_algebra.hpp"
#include "koszul/matrix.hpp"

namespace koszul {

/// A named builtin such as "gl:3" or "heisenberg:5".
struct BuiltinRef {
  std::string name;
  std::vector<std::size_t> params;

  /// Parses "name" or "name:p1,p2". Throws ParseError.
  static BuiltinRef parse(std::string_view text);
  std::string to_string() const;
};

/// Builtins:
///   gl:n            elementary matrices E_ij, row-major
///   sl:n            off-diagonal E_ij row-major, then H_i = E_ii - E_{i+1,i+1}
///   so:n  (n >= 2)  A_ij = E_ij - E_ji, i < j, lexicographic
///   abelian:n
///   heisenberg:d    d = 2k + 1 >= 3, basis p_1..p_k, q_1..q_k, z with [p_i, q_i] = z
/// Errors: UnknownBuiltin, InvalidParams.
LieAlgebra builtin(const BuiltinRef& ref);
LieAlgebra builtin(std::string_view name, std::vector<std::size_t> params);

/// The n x n matrices spanning a matrix builtin (gl, sl, so), in basis order.
std::vector<Matrix> matrix_basis(const BuiltinRef& ref);
bool is_matrix_builtin(const std::string& name);
/// Matrix size n of a matrix builtin.
std::size_t matrix_size(const BuiltinRef& ref);

/// Lie algebra spanned by commutators of the given matrices (which must close).
LieAlgebra matrix_lie_algebra(const std::vector<Matrix>& basis, std::vector<std::string> names);

/// Coordinates of a matrix in the basis of a matrix builtin.
Vector matrix_coordinates(const BuiltinRef& ref, const Matrix& m);

/// Canonical sub-specs inside a builtin ambient:
///   "zero", "full", "center" (heisenberg only),
///   "gl:k" / "sl:k" / "so:k" embedded in the top-left k x k block of a matrix builtin.
/// For so:n inside gl:n the complement is the symmetric matrices.
SubalgebraPair canonical_subalgebra(const BuiltinRef& ambient, std::string_view sub_spec);

/// (gl(n), so(n)) with quotient basis the symmetric matrices E_ii (i = 1..n), then
/// E_ij + E_ji (i < j).
SubalgebraPair gl_so_pair(std::size_t n);

/// The block inclusion gl(n) -> gl(n') (n <= n') as a matrix (n'^2 x n^2).
Matrix gl_block_inclusion(std::size_t n, std::size_t target_n);

}  // namespace koszul

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "koszul/matrix.hpp"
#include "koszul/scalar.hpp"

namespace koszul {

/// One coefficient of a sparse vector.
struct Term {
  std::size_t index;
  Scalar coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Antisymmetric bilinear table on a basis: entry (i, j) is the sparse expansion of
/// [e_i, e_j]. Not required to satisfy Jacobi; quotient brackets on g/h use it too.
class BracketTable {
 public:
  BracketTable() = default;
  explicit BracketTable(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Term>& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set(std::size_t i, std::size_t j, const Vector& v);

  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad_x = [x, -].
  Matrix ad(const Vector& x) const;

  friend bool operator==(const BracketTable&, const BracketTable&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::vector<Term>> entries_;
};

/// Raw structure-constant entry c[i][j][k] as read from a file or table.
struct StructureEntry {
  std::size_t i, j, k;
  Scalar value;
};

struct Violation {
  enum class Kind { IndexOutOfRange, Antisymmetry, Jacobi };
  Kind kind;
  std::vector<std::size_t> indices;  // (i,j,k) or (i,j,k,l)
  Scalar residual;
};

std::string to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

class LieAlgebra;

/// Checks antisymmetry and the Jacobi identity of a raw table. Entries may list either
/// orientation of a pair; a missing orientation is derived by antisymmetry, and a pair
/// listed both ways must carry opposite values. Repeated entries accumulate.
ValidationReport validate_structure(std::size_t dim, const std::vector<StructureEntry>& entries);

/// Finite-dimensional Lie algebra over the rationals, given by structure constants.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Validates and builds; throws Error("AntisymmetryViolation" / "JacobiViolation" / ...).
  static LieAlgebra from_entries(std::vector<std::string> basis_names, const std::vector<StructureEntry>& entries);
  /// Builds from a complete table, still checking Jacobi.
  static LieAlgebra from_table(std::vector<std::string> basis_names, BracketTable table);

  std::size_t dim() const noexcept { return table_.dim(); }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  const BracketTable& table() const noexcept { return table_; }

  Vector bracket(const Vector& x, const Vector& y) const { return table_.bracket(x, y); }
  Matrix ad(const Vector& x) const { return table_.ad(x); }

  /// Nonzero structure constants with i < j, sorted by (i, j, k).
  std::vector<StructureEntry> structure_constants() const;

 private:
  LieAlgebra(std::vector<std::string> names, BracketTable table) : names_(std::move(names)), table_(std::move(table)) {}
  std::vector<std::string> names_;
  BracketTable table_;
};

/// A validated subalgebra h of g, together with a complement representing g/h and the
/// induced action of h on g/h.
class SubalgebraPair {
 public:
  const LieAlgebra& ambient() const noexcept { return ambient_; }
  /// The subalgebra with structure constants in its own basis (the columns of sub_basis).
  const LieAlgebra& sub_algebra() const noexcept { return sub_; }
  /// n x m, columns span h.
  const Matrix& sub_basis() const noexcept { return sub_basis_; }
  /// n x r, columns complete sub_basis to a basis of g.
  const Matrix& quotient_basis() const noexcept { return quotient_basis_; }
  std::size_t sub_dim() const noexcept { return sub_basis_.cols(); }
  std::size_t quotient_dim() const noexcept { return quotient_basis_.cols(); }

  /// r x n matrix of the projection s: g -> g/h in quotient coordinates.
  const Matrix& projection() const noexcept { return projection_; }
  /// m x n matrix sending v to its h-coordinates in the splitting g = h + complement.
  const Matrix& sub_projection() const noexcept { return sub_projection_; }
  /// Action matrices (r x r) of each sub-basis element on g/h.
  const std::vector<Matrix>& action() const noexcept { return action_; }
  /// [q_a, q_b] projected to g/h, for the quotient basis q.
  const BracketTable& quotient_bracket() const noexcept { return quotient_bracket_; }

  /// Quotient coordinates s(v).
  Vector project(const Vector& v) const { return projection_ * v; }

 private:
  friend SubalgebraPair make_subalgebra(const LieAlgebra&, const std::vector<Vector>&,
                                        const std::optional<std::vector<Vector>>&);
  LieAlgebra ambient_;
  LieAlgebra sub_;
  Matrix sub_basis_;
  Matrix quotient_basis_;
  Matrix projection_;
  Matrix sub_projection_;
  std::vector<Matrix> action_;
  BracketTable quotient_bracket_;
};

/// Validates independence and bracket closure. Without an explicit complement the
/// quotient basis is the set of standard basis vectors not hit by a pivot of the RREF
/// of the sub-basis. Errors: DependentVectors, NotClosedUnderBracket, InvalidComplement.
SubalgebraPair make_subalgebra(const LieAlgebra& g, const std::vector<Vector>& vectors,
                               const std::optional<std::vector<Vector>>& complement = std::nullopt);

/// The pair (g, 0).
SubalgebraPair zero_subalgebra(const LieAlgebra& g);
/// The pair (g, g).
SubalgebraPair full_subalgebra(const LieAlgebra& g);

/// Homomorphism of pairs (g', h') -> (g, h): a bracket-preserving H with H[h'] in h.
struct PairMorphism {
  SubalgebraPair source;
  SubalgebraPair target;
  Matrix map;  // dim g x dim g'
};

/// Errors: DimensionMismatch, NotAHomomorphism, SubalgebraNotPreserved.
PairMorphism make_pair_morphism(SubalgebraPair source, SubalgebraPair target, Matrix map);

/// Composition second ∘ first; the middle pairs must agree in dimension.
PairMorphism compose(const PairMorphism& second, const PairMorphism& first);

struct DirectSum {
  LieAlgebra sum;
  Matrix first_injection;   // (n + m) x n
  Matrix second_injection;  // (n + m) x m
};

DirectSum direct_sum(const LieAlgebra& g, const LieAlgebra& h);

}  // namespace koszul

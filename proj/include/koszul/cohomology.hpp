#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "koszul/lie_algebra.hpp"
#include "koszul/matrix.hpp"

namespace koszul {

/// Realizes the chains of a complex as a graded subalgebra of an exterior algebra, which
/// gives the complex its product.
class ExteriorEmbedding {
 public:
  /// Chains are the whole exterior algebra on `ambient_dim` generators.
  static std::shared_ptr<const ExteriorEmbedding> full(std::size_t ambient_dim);
  /// Chains in degree k are the columns of bases[k] (coordinates in the degree-k
  /// exterior basis). The spans must be closed under wedge.
  static std::shared_ptr<const ExteriorEmbedding> subspace(std::size_t ambient_dim, std::vector<Matrix> bases);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  bool is_full() const noexcept { return bases_.empty(); }
  /// Chain coordinates -> exterior coordinates.
  Vector embed(std::size_t degree, const Vector& chain) const;
  /// Exterior coordinates -> chain coordinates, if the element lies in the subspace.
  std::optional<Vector> restrict(std::size_t degree, const Vector& element) const;
  /// Product of two chains; throws Error("ProductNotClosed") if it leaves the subspace.
  Vector multiply(std::size_t p, const Vector& a, std::size_t q, const Vector& b) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Matrix> bases_;
  std::vector<ColumnSpanSolver> solvers_;
};

/// Finite cochain complex C^0 -> C^1 -> ... -> C^top with exact differentials.
class CochainComplex {
 public:
  /// differentials[k] is dims[k+1] x dims[k], for k < top. Throws InvalidComplex on shape
  /// mismatch or when d_{k+1} d_k != 0.
  CochainComplex(std::vector<std::size_t> dims, std::vector<Matrix> differentials,
                 std::shared_ptr<const ExteriorEmbedding> product = nullptr);

  std::size_t top_degree() const noexcept { return dims_.size() - 1; }
  /// Zero above the top degree.
  std::size_t dim(std::size_t degree) const noexcept { return degree < dims_.size() ? dims_[degree] : 0; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  /// dim(k+1) x dim(k) for every k; zero-row matrices from the top degree on.
  const Matrix& differential(std::size_t degree) const;
  const ExteriorEmbedding* product() const noexcept { return product_.get(); }

 private:
  std::vector<std::size_t> dims_;
  std::vector<Matrix> differentials_;
  std::shared_ptr<const ExteriorEmbedding> product_;
};

/// CE complex of the algebra with the exterior product.
/// Largest exterior algebra handled with dense differentials; C(12, 6) = 924.
inline constexpr std::size_t kMaxDenseDim = 12;

/// Throws Error("DimensionTooLarge") above kMaxDenseDim.
void require_dense_dim(std::size_t dim, const char* what);

std::shared_ptr<const CochainComplex> exterior_complex(const LieAlgebra& g);
/// Exterior algebra on table.dim() generators with differential sign * ce_differential(table).
std::shared_ptr<const CochainComplex> exterior_complex(const BracketTable& table, const Scalar& sign);

/// Alternating sum of chain dimensions.
long euler_characteristic(const CochainComplex& c);

struct Reduction {
  Vector coordinates;  // in the representative basis
  Vector primitive;    // b with cocycle = representatives * coordinates + d b
};

struct CohomologyClass {
  std::size_t degree = 0;
  Vector coordinates;
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
};

class CohomologySpace {
 public:
  struct Degree {
    std::size_t betti = 0;
    Matrix representatives;       // dim_k x betti, cocycle columns
    Matrix coboundary_basis;      // dim_k x rank d_{k-1}
    Matrix coboundary_preimages;  // dim_{k-1} x rank d_{k-1}; d applied to it gives coboundary_basis
    ColumnSpanSolver reducer;     // over [coboundary_basis | representatives]
  };

  CohomologySpace(std::shared_ptr<const CochainComplex> complex, std::vector<Degree> degrees)
      : complex_(std::move(complex)), degrees_(std::move(degrees)) {}

  const CochainComplex& complex() const noexcept { return *complex_; }
  std::shared_ptr<const CochainComplex> complex_ptr() const noexcept { return complex_; }
  std::size_t top_degree() const noexcept { return complex_->top_degree(); }
  std::size_t betti(std::size_t degree) const noexcept { return degree < degrees_.size() ? degrees_[degree].betti : 0; }
  std::vector<std::size_t> betti_numbers() const;
  std::size_t total_dimension() const;
  const Degree& degree(std::size_t k) const { return degrees_.at(k); }
  const Matrix& representatives(std::size_t degree) const { return degrees_.at(degree).representatives; }

  /// Throws Error("NotACocycle") carrying the residual when d c != 0.
  Reduction reduce(const Vector& cocycle, std::size_t degree) const;
  CohomologyClass class_of(const Vector& cocycle, std::size_t degree) const;
  /// A cocycle representing the class.
  Vector representative(const CohomologyClass& c) const;
  CohomologyClass unit() const;
  /// Basis class j of degree k.
  CohomologyClass basis_class(std::size_t degree, std::size_t j) const;

 private:
  std::shared_ptr<const CochainComplex> complex_;
  std::vector<Degree> degrees_;
};

/// Representatives are the kernel-basis vectors that RREF selects as pivots after the
/// coboundary columns, so the output is reproducible from the input.
CohomologySpace compute_cohomology(std::shared_ptr<const CochainComplex> complex);

/// Per-degree matrices; entry k is dst.dim(k) x src.dim(k), for k = 0..src top.
using ChainMap = std::vector<Matrix>;

/// Throws Error("NotAChainMap") naming the degree and a witness basis vector.
void verify_chain_map(const ChainMap& f, const CochainComplex& src, const CochainComplex& dst);
ChainMap compose(const ChainMap& second, const ChainMap& first);

struct CohomologyMap {
  std::vector<Matrix> degrees;  // betti_dst(k) x betti_src(k)

  std::size_t rank(std::size_t degree) const;
  bool injective() const;
  bool surjective() const;
  friend bool operator==(const CohomologyMap&, const CohomologyMap&) = default;
};

/// Maps representatives and reduces in the target. Verifies the chain-map property first.
CohomologyMap induced_map(const ChainMap& f, const CohomologySpace& src, const CohomologySpace& dst);
CohomologyMap compose(const CohomologyMap& second, const CohomologyMap& first);

/// Classes in degree above the top give the zero class of that degree.
CohomologyClass cup_product(const CohomologyClass& a, const CohomologyClass& b, const CohomologySpace& space);

/// Degreewise spans (columns in class coordinates) of the subalgebra generated by the unit
/// and the given classes.
std::vector<Matrix> generated_subalgebra(const CohomologySpace& space, const std::vector<CohomologyClass>& generators);

/// Whether the unit and the odd-degree classes generate the whole cohomology ring.
bool odd_generated(const CohomologySpace& space);

}  // namespace koszul

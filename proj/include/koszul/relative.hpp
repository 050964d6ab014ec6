#pragma once

#include <memory>
#include <vector>

#include "koszul/cohomology.hpp"
#include "koszul/lie_algebra.hpp"

namespace koszul {

/// Horizontal and h-invariant elements of the exterior algebra on g*, with the restricted
/// CE differential.
struct BasicSubcomplex {
  SubalgebraPair pair;
  /// embedding[k]: C(n, k) x b_k, columns are the basic basis in degree k.
  std::vector<Matrix> embedding;
  std::shared_ptr<const CochainComplex> complex;
};

/// Basis per degree of the kernel of all i_x and theta_x, x in the sub-basis.
/// Throws Error("NotDStable") if d leaves the subspace.
BasicSubcomplex basic_subcomplex(const SubalgebraPair& pair);

/// h-invariant elements of the exterior algebra on (g/h)*, with the differential
///   <dbar Psi, [v_1] ^ ... ^ [v_{k+1}]> = sum_{i<j} (-1)^{i+j+1} <Psi, [[v_i, v_j]] ^ ...>
/// evaluated on complement representatives.
struct InvariantQuotientComplex {
  SubalgebraPair pair;
  /// invariants[k]: C(r, k) x i_k, columns are the invariant basis in degree k.
  std::vector<Matrix> invariants;
  std::shared_ptr<const CochainComplex> complex;
};

InvariantQuotientComplex invariant_quotient_complex(const SubalgebraPair& pair);

/// dbar on the full exterior algebra of (g/h)* for the chosen complement, degree k -> k + 1.
/// It is only well defined (complement independent) on invariants.
Matrix quotient_differential(const SubalgebraPair& pair, std::size_t degree);

/// Pullback along s: g -> g/h from invariants to the basic model, in both bases.
struct ModelComparison {
  ChainMap isomorphism;           // basic-basis coordinates of s^* applied to invariant basis
  std::vector<int> signs;         // s^* dbar = sign * d s^* in each degree
  std::vector<bool> sign_forced;  // false when both sides vanish and any sign fits
  std::vector<std::size_t> basic_dims;
  std::vector<std::size_t> invariant_dims;
};

/// Throws Error("ModelMismatch") when dimensions differ, s^* fails to be bijective, or no
/// sign intertwines the differentials.
ModelComparison compare_models(const InvariantQuotientComplex& quotient, const BasicSubcomplex& basic);

/// Pullback along the inclusion h -> g, as a chain map from the CE complex of g to that of h.
ChainMap restriction_map(const SubalgebraPair& pair);

}  // namespace koszul

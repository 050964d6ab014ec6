#pragma once

#include <memory>
#include <vector>

#include "koszul/cohomology.hpp"
#include "koszul/exterior.hpp"
#include "koszul/lie_algebra.hpp"
#include "koszul/relative.hpp"

namespace koszul {

/// The complexes and cohomologies of a pair, computed once and shared immutably.
struct PairContext {
  SubalgebraPair pair;
  std::shared_ptr<const CochainComplex> ambient;
  std::shared_ptr<const CohomologySpace> ambient_cohomology;
  std::shared_ptr<const InvariantQuotientComplex> quotient;
  std::shared_ptr<const CohomologySpace> relative_cohomology;
};

/// With `with_ambient` false only the relative side is built (ambient fields stay null).
PairContext make_context(const SubalgebraPair& pair, bool with_ambient = true);

/// Pullback along -s: g -> g/h, from the invariant quotient basis into the exterior basis
/// of g*. Throws Error("ChainMapViolation") if it fails to intertwine dbar and d_g.
ChainMap delta_chain(const InvariantQuotientComplex& quotient, const CochainComplex& ambient);

struct KoszulResult {
  ChainMap chain_map;
  CohomologyMap cohomology_map;
  bool injective = false;
  std::vector<std::size_t> ranks;
  /// Kernel basis per degree as classes of the relative cohomology ...
  std::vector<CohomologyClass> kernel_classes;
  /// ... and the same kernel as representative forms on g/h.
  std::vector<Form> kernel_forms;
};

KoszulResult delta_cohom(const PairContext& context);

struct FactorizationReport {
  CohomologyMap via_basic;  // k# o (-s)#
  CohomologyMap direct;
  std::vector<std::size_t> basic_betti;
};

/// Recomputes the map through the basic subcomplex and compares exactly per degree.
/// Throws Error("FactorizationMismatch") on any difference.
FactorizationReport factorization_check(const PairContext& context, const KoszulResult& result);

struct NczReport {
  bool ncz = false;
  CohomologyMap restriction;
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> sub_betti;
  /// When ncz: per degree, columns are preimages of the basis classes of H(h); the
  /// restriction times this matrix is re-verified to be the identity.
  std::vector<Matrix> right_inverse;
};

NczReport ncz(const PairContext& context);

struct ComplementReport {
  bool exists = false;
  Matrix projection;   // m x n, h-equivariant, identity on h
  Matrix complement;   // n x (n - m), kernel of the projection
  Vector certificate;  // when infeasible: y with y^T A = 0, y^T b != 0 for the linear system
};

/// Searches for an h-equivariant projection g -> h restricting to the identity on h.
ComplementReport invariant_complement(const SubalgebraPair& pair);

struct DirectProductReport {
  bool injective = false;
  bool formula_holds = false;
  bool horizontal = false;  // images are annihilated by i_y for y in the second factor
  std::vector<std::size_t> betti_source;
  std::vector<std::size_t> betti_target;
};

/// Builds (g + h, h) and checks Delta(Psi) = (-1)^{|Psi|} pr_1^* Psi at chain level.
/// Throws Error("FormulaMismatch") on a counterexample.
DirectProductReport direct_product_check(const LieAlgebra& g, const LieAlgebra& h);

struct FunctorialityReport {
  bool commutes = false;
  CohomologyMap right_after_top;    // H^# o Delta_(g,h)#
  CohomologyMap bottom_after_left;  // Delta_(g',h')# o H^{+#}
  CohomologyMap quotient_pullback;  // H^{+#}
};

/// Throws Error("DiagramMismatch") when the square does not commute.
FunctorialityReport functoriality_check(const PairMorphism& morphism);

}  // namespace koszul

#include "doctest.h"
#include "helpers.hpp"
#include "koszul/builtins.hpp"

using namespace koszul;
using testing::error_code;
using testing::vec;

TEST_CASE("every small builtin validates") {
  for (const auto& name : testing::small_builtins()) {
    const LieAlgebra g = testing::algebra(name);
    CHECK_MESSAGE(validate_structure(g.dim(), g.structure_constants()).ok(), name);
  }
}

TEST_CASE("gl(2) commutators of elementary matrices") {
  const LieAlgebra g = testing::algebra("gl:2");
  CHECK(g.basis_names() == std::vector<std::string>{"E11", "E12", "E21", "E22"});
  CHECK(g.bracket(unit_vector(4, 0), unit_vector(4, 1)) == vec({0, 1, 0, 0}));
  CHECK(g.bracket(unit_vector(4, 1), unit_vector(4, 2)) == vec({1, 0, 0, -1}));
}

TEST_CASE("so(3) brackets match the oracle") {
  const LieAlgebra g = testing::algebra("so:3");  // A12 A13 A23
  CHECK(g.bracket(unit_vector(3, 0), unit_vector(3, 1)) == vec({0, 0, -1}));
  CHECK(g.bracket(unit_vector(3, 0), unit_vector(3, 2)) == vec({0, 1, 0}));
  CHECK(g.bracket(unit_vector(3, 1), unit_vector(3, 2)) == vec({-1, 0, 0}));
}

TEST_CASE("abelian and heisenberg") {
  CHECK(testing::algebra("abelian:4").structure_constants().empty());
  const LieAlgebra h = testing::algebra("heisenberg:5");  // p1 p2 q1 q2 z
  CHECK(h.bracket(unit_vector(5, 0), unit_vector(5, 2)) == vec({0, 0, 0, 0, 1}));
  CHECK(h.bracket(unit_vector(5, 0), unit_vector(5, 3)) == vec({0, 0, 0, 0, 0}));
  CHECK(h.structure_constants().size() == 2);
}

TEST_CASE("builtin errors") {
  CHECK(error_code([] { builtin("e8", {}); }) == "UnknownBuiltin");
  CHECK(error_code([] { builtin("so", {1}); }) == "InvalidParams");
  CHECK(error_code([] { builtin("heisenberg", {4}); }) == "InvalidParams");
  CHECK(error_code([] { builtin("gl", {}); }) == "InvalidParams");
  CHECK(error_code([] { BuiltinRef::parse("gl:x"); }) == "ParseError");
}

TEST_CASE("canonical sub-specs") {
  const BuiltinRef gl3{"gl", {3}};
  const SubalgebraPair so3 = canonical_subalgebra(gl3, "so:3");
  CHECK(so3.sub_dim() == 3);
  CHECK(so3.quotient_dim() == 6);
  // the complement is the symmetric matrices
  for (std::size_t c = 0; c < 6; ++c) {
    const Vector q = so3.quotient_basis().column(c);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(q[i * 3 + j] == q[j * 3 + i]);
  }
  CHECK(canonical_subalgebra(gl3, "gl:2").sub_dim() == 4);
  CHECK(canonical_subalgebra(gl3, "zero").sub_dim() == 0);
  CHECK(canonical_subalgebra(gl3, "full").quotient_dim() == 0);
  CHECK(canonical_subalgebra(BuiltinRef{"heisenberg", {3}}, "center").sub_dim() == 1);
  CHECK(canonical_subalgebra(BuiltinRef{"so", {5}}, "so:3").quotient_dim() == 7);
  CHECK(error_code([&] { canonical_subalgebra(gl3, "so:4"); }) == "InvalidParams");
}

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "koszul/classes.hpp"

using namespace koszul;
using testing::error_code;

namespace {

Matrix random_skew(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = Scalar(num(rng), den(rng));
      a(i, j).canonicalize();
      a(j, i) = -a(i, j);
    }
  return a;
}

std::vector<std::size_t> degrees(const GeneratorReport& r) {
  std::vector<std::size_t> out;
  for (const auto& g : r.generators) out.push_back(g.degree);
  return out;
}

}  // namespace

TEST_CASE("the first trace form is the trace covector") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Form t = trace_form(n, 1);
    const SubalgebraPair p = gl_so_pair(n);
    Vector identity_coset(p.quotient_dim());
    for (std::size_t i = 0; i < n; ++i) identity_coset[i] = 1;  // E_ii come first
    CHECK(t.evaluate({identity_coset}) == Scalar(static_cast<long>(n)));
  }
}

TEST_CASE("the degree-5 trace form generates degree 5 of H(gl(3), so(3))") {
  const Form t = trace_form(3, 2);
  CHECK(t.degree() == 5);
  CHECK_FALSE(t.is_zero());
  const PairContext c = make_context(gl_so_pair(3));
  const auto coords = ColumnSpanSolver(c.quotient->invariants[5]).coordinates(t.to_vector());
  REQUIRE(coords);
  CHECK(c.quotient->complex->differential(5) * *coords == Vector(c.quotient->complex->dim(6)));
  const CohomologyClass cls = c.relative_cohomology->class_of(*coords, 5);
  CHECK_FALSE(is_zero(cls.coordinates));
  CHECK(c.relative_cohomology->betti(5) == 1);
  CHECK_NOTHROW(trace_form(4, 2));
}

TEST_CASE("trace form degree limits") {
  CHECK(error_code([] { trace_form(2, 2); }) == "DegreeOutOfRange");
  CHECK(error_code([] { trace_form(3, 0); }) == "DegreeOutOfRange");
}

TEST_CASE("Pfaffian values and identities") {
  const Scalar a(3, 2), b(-5);
  CHECK(pfaffian(Matrix::from_rows(2, {{0, a}, {-a, 0}})) == a);
  Matrix blocks(4, 4);
  blocks(0, 1) = a;
  blocks(1, 0) = -a;
  blocks(2, 3) = b;
  blocks(3, 2) = -b;
  CHECK(pfaffian(blocks) == a * b);
  CHECK(pfaffian(Matrix(0, 0)) == 1);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  for (std::size_t n : {2, 4, 6}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix s = random_skew(rng, n);
      const Scalar pf = pfaffian(s);
      CHECK(pf * pf == determinant(s));
      Matrix p(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = d(rng);
      CHECK(pfaffian(p.transpose() * s * p) == determinant(p) * pf);
    }
  }
  CHECK(error_code([] { pfaffian(Matrix(3, 3)); }) == "OddSize");
  CHECK(error_code([] { pfaffian(Matrix::identity(2)); }) == "NotSkewSymmetric");
}

TEST_CASE("even generator of H(gl(2), so(2))") {
  const PfaffianClass p = pfaffian_class(1);
  CHECK(p.cls.degree == 2);
  CHECK(p.unique);
  CHECK(p.completes_ring);
  // it lies in the kernel of Delta#, together with its product with y1
  const PairContext c = make_context(gl_so_pair(2));
  const KoszulResult r = delta_cohom(c);
  CHECK(is_zero(r.cohomology_map.degrees[2] * p.cls.coordinates));
  const CohomologyClass y1 = c.relative_cohomology->basis_class(1, 0);
  const CohomologyClass y1y2 = cup_product(y1, p.cls, *c.relative_cohomology);
  CHECK_FALSE(is_zero(y1y2.coordinates));
  CHECK(is_zero(r.cohomology_map.degrees[3] * y1y2.coordinates));
  // nonzero on some 2-frame of symmetric basis matrices
  bool nonzero = false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      nonzero |= p.representative.evaluate({unit_vector(3, i), unit_vector(3, j)}) != 0;
  CHECK(nonzero);
}

TEST_CASE("generator identification") {
  const GeneratorReport g3 = identify_generators(gl_so_pair(3));
  CHECK(degrees(g3) == std::vector<std::size_t>{1, 5});
  CHECK(g3.generators[0].label == "y1");
  CHECK(g3.generators[1].label == "y3");
  CHECK(g3.exterior_presentation);

  const GeneratorReport g2 = identify_generators(gl_so_pair(2));
  CHECK(degrees(g2) == std::vector<std::size_t>{1, 2});
  CHECK(g2.generators[1].label == "y2");
  CHECK(g2.exterior_presentation);

  const GeneratorReport g1 = identify_generators(zero_subalgebra(testing::algebra("gl:1")));
  CHECK(degrees(g1) == std::vector<std::size_t>{1});
  CHECK(g1.exterior_presentation);

  // H(heisenberg(3)) is not an exterior algebra on its generators
  const GeneratorReport h = identify_generators(zero_subalgebra(testing::algebra("heisenberg:3")));
  CHECK_FALSE(h.exterior_presentation);
}

TEST_CASE("the even case (gl(4), so(4))") {
  const PairContext c = make_context(gl_so_pair(4), false);
  const CohomologySpace& h = *c.relative_cohomology;
  CHECK(h.betti_numbers() == std::vector<std::size_t>{1, 1, 0, 0, 1, 2, 1, 0, 0, 1, 1});
  const GeneratorReport r = identify_generators(c);
  CHECK(degrees(r) == std::vector<std::size_t>{1, 4, 5});
  CHECK(r.generators[1].label == "y4");
  CHECK(r.generators[2].label == "y3");
  CHECK(r.exterior_presentation);

  const PfaffianClass p = pfaffian_class(2);
  CHECK(p.unique);
  CHECK(p.completes_ring);

  // the degree-5 trace form is independent of y1 y4 in H^5
  const auto coords = ColumnSpanSolver(c.quotient->invariants[5]).coordinates(trace_form(4, 2).to_vector());
  REQUIRE(coords);
  const CohomologyClass y3 = h.class_of(*coords, 5);
  const CohomologyClass y1y4 = cup_product(h.basis_class(1, 0), p.cls, h);
  CHECK(rank(Matrix::from_columns(2, {y3.coordinates, y1y4.coordinates})) == 2);
  CHECK(error_code([&] { delta_cohom(c); }) == "MissingAmbient");
}

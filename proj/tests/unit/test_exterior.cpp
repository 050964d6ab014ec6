#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "koszul/exterior.hpp"

using namespace koszul;
using testing::error_code;
using testing::vec;

namespace {

Form random_form(std::mt19937& rng, std::size_t dim, std::size_t degree) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vector v(binomial(dim, degree));
  for (auto& x : v) x = d(rng);
  return Form::from_vector(dim, degree, v);
}

Vector random_vector(std::mt19937& rng, std::size_t dim) {
  std::uniform_int_distribution<int> d(-2, 2);
  Vector v(dim);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_CASE("exterior bases and signs") {
  CHECK(binomial(10, 5) == 252);
  CHECK(exterior_basis(4, 2).size() == 6);
  CHECK(exterior_basis(4, 2)[0].indices() == std::vector<std::size_t>{0, 1});
  CHECK(exterior_basis(4, 2)[5].indices() == std::vector<std::size_t>{2, 3});
  std::vector<std::size_t> s{2, 0, 1};
  CHECK(sort_sign(s) == 1);
  std::vector<std::size_t> t{1, 0, 2};
  CHECK(sort_sign(t) == -1);
  std::vector<std::size_t> r{1, 1};
  CHECK(sort_sign(r) == 0);
  CHECK(error_code([] { MultiIndex({2, 1}); }) == "InvalidMultiIndex");
}

TEST_CASE("coefficients are values on basis tuples") {
  const Form a = wedge(Form::covector(3, 0), Form::covector(3, 1));
  CHECK(a.evaluate({unit_vector(3, 0), unit_vector(3, 1)}) == 1);
  CHECK(a.evaluate({unit_vector(3, 1), unit_vector(3, 0)}) == -1);
  CHECK(a.evaluate({vec({1, 2, 0}), vec({3, 4, 5})}) == -2);
}

TEST_CASE("wedge is graded commutative and associative") {
  std::mt19937 rng(1);
  for (std::size_t p = 0; p <= 3; ++p)
    for (std::size_t q = 0; q <= 3; ++q) {
      const Form a = random_form(rng, 6, p), b = random_form(rng, 6, q), c = random_form(rng, 6, 1);
      CHECK(wedge(a, b) == Scalar((p * q) % 2 ? -1 : 1) * wedge(b, a));
      CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
}

TEST_CASE("interior product is an antiderivation") {
  std::mt19937 rng(2);
  for (std::size_t p = 0; p <= 3; ++p)
    for (std::size_t q = 0; q <= 2; ++q) {
      const Form a = random_form(rng, 5, p), b = random_form(rng, 5, q);
      const Vector x = random_vector(rng, 5);
      const Form lhs = interior(x, wedge(a, b));
      if (p + q == 0) {
        CHECK(lhs.is_zero());
        continue;
      }
      Form rhs(5, p + q - 1);
      if (p > 0) rhs = rhs + wedge(interior(x, a), b);
      if (q > 0) rhs = rhs + Scalar(p % 2 ? -1 : 1) * wedge(a, interior(x, b));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("so(3) differential on 1-forms matches the oracle") {
  const Matrix d = ce_differential(testing::algebra("so:3"), 1);
  const Matrix expected = Matrix::from_rows(3, {vec({0, 0, 1}), vec({0, -1, 0}), vec({1, 0, 0})});
  CHECK(d == expected);
}

TEST_CASE("d squares to zero, is a derivation, and satisfies the Cartan identities") {
  std::mt19937 rng(3);
  for (const auto& name : testing::small_builtins()) {
    const LieAlgebra g = testing::algebra(name);
    const std::size_t n = g.dim();
    for (std::size_t k = 0; k + 1 < n; ++k)
      CHECK_MESSAGE((ce_differential(g, k + 1) * ce_differential(g, k)).is_zero(), name << " degree " << k);
    if (n > 6) continue;
    const Vector x = random_vector(rng, n), y = random_vector(rng, n);
    for (std::size_t k = 1; k <= n; ++k) {
      // theta_x = i_x d + d i_x
      Matrix cartan = k < n ? interior_matrix(x, k + 1) * ce_differential(g, k) : Matrix(binomial(n, k), binomial(n, k));
      cartan = cartan + ce_differential(g, k - 1) * interior_matrix(x, k);
      CHECK_MESSAGE(lie_derivative_matrix(g, x, k) == cartan, name << " degree " << k);
      const Matrix tx = lie_derivative_matrix(g, x, k), ty = lie_derivative_matrix(g, y, k);
      CHECK(tx * ty - ty * tx == lie_derivative_matrix(g, g.bracket(x, y), k));
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = 0; p + q + 1 < n; ++q) {
        const Form a = random_form(rng, n, p), b = random_form(rng, n, q);
        const Vector lhs = ce_differential(g, p + q) * wedge(a, b).to_vector();
        const Vector da = ce_differential(g, p) * a.to_vector();
        const Vector db = ce_differential(g, q) * b.to_vector();
        const Vector rhs = add(wedge_vectors(n, p + 1, da, q, b.to_vector()),
                               scaled(Scalar(p % 2 ? -1 : 1), wedge_vectors(n, p, a.to_vector(), q + 1, db)));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("pullback is contravariant and matches the form-level pullback") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> dist(-2, 2);
  Matrix l(4, 3), m(3, 5);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 3; ++j) l(i, j) = dist(rng);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 5; ++j) m(i, j) = dist(rng);
  for (std::size_t k = 0; k <= 4; ++k) {
    CHECK(pullback_matrix(l * m, k) == pullback_matrix(m, k) * pullback_matrix(l, k));
    const Form a = random_form(rng, 4, k);
    CHECK(pullback_matrix(l, k) * a.to_vector() == pullback(a, l).to_vector());
  }
}

TEST_CASE("alternated product trace on gl(2)") {
  const std::vector<Matrix> e = matrix_basis(BuiltinRef{"gl", {2}});
  const Form f = alternation(4, 3, [&](std::span<const std::size_t> idx) -> Scalar {
    const Matrix p = e[idx[0]] * e[idx[1]] * e[idx[2]];
    return p(0, 0) + p(1, 1);
  });
  // value on (E11, E12, E21) from the sympy oracle
  CHECK(f.coefficient(MultiIndex({0, 1, 2})) == 3);
}

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "koszul/error.hpp"
#include "koszul/matrix.hpp"

using namespace koszul;

namespace {

Matrix rows(std::vector<std::vector<long>> r) {
  std::vector<Vector> out;
  for (auto& row : r) {
    Vector v;
    for (long x : row) v.emplace_back(x);
    out.push_back(v);
  }
  return Matrix::from_rows(r.empty() ? 0 : r[0].size(), out);
}

// Leibniz formula, independent of the elimination code.
Scalar leibniz(const Matrix& m) {
  std::vector<std::size_t> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  Scalar total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    Scalar term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < p.size(); ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST_CASE("scalars parse as reduced rationals") {
  CHECK(parse_scalar("6/4") == Scalar(3, 2));
  CHECK(parse_scalar("-2/6") == Scalar(-1, 3));
  CHECK(parse_scalar("7") == Scalar(7));
  CHECK_THROWS_AS(parse_scalar("10/-4"), Error);
  CHECK_THROWS_AS(parse_scalar("1/0"), Error);
  CHECK_THROWS_AS(parse_scalar("abc"), Error);
  CHECK_THROWS_AS(parse_scalar("0.5"), Error);
}

TEST_CASE("row reduction, rank and nullspace") {
  const Matrix a = rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  const Matrix n = nullspace(a);
  REQUIRE(n.cols() == 1);
  CHECK((a * n).is_zero());
  const Echelon e = row_reduce(a);
  CHECK(e.pivot_columns == std::vector<std::size_t>{0, 1});
  CHECK(e.reduced == rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
  CHECK(rank(Matrix(0, 5)) == 0);
  CHECK(nullspace(Matrix(0, 3)) == Matrix::identity(3));
}

TEST_CASE("Bareiss determinant agrees with the Leibniz formula") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = Scalar(d(rng), 1 + (d(rng) + 4) % 3);
        m(i, j).canonicalize();
      }
    CHECK(determinant(m) == leibniz(m));
  }
  CHECK(determinant(Matrix(0, 0)) == 1);
}

TEST_CASE("column span solver") {
  const Matrix b = rows({{1, 0}, {1, 1}, {0, 2}});
  const ColumnSpanSolver s(b);
  const auto c = s.coordinates(Vector{Scalar(2), Scalar(5), Scalar(6)});
  REQUIRE(c);
  CHECK(*c == Vector{Scalar(2), Scalar(3)});
  CHECK_FALSE(s.contains(Vector{Scalar(1), Scalar(0), Scalar(0)}));
  CHECK_THROWS_AS(ColumnSpanSolver(rows({{1, 2}, {2, 4}})), Error);
}

TEST_CASE("affine solve returns a solution or a Fredholm certificate") {
  const Matrix a = rows({{1, 1}, {2, 2}});
  const AffineSolution ok = solve_affine(a, Vector{Scalar(1), Scalar(2)});
  REQUIRE(ok.solution);
  CHECK(a * *ok.solution == Vector{Scalar(1), Scalar(2)});

  const AffineSolution bad = solve_affine(a, Vector{Scalar(1), Scalar(3)});
  CHECK_FALSE(bad.solution);
  REQUIRE(bad.certificate.size() == 2);
  // y^T A = 0 and y^T b != 0
  const Matrix y = Matrix::from_rows(2, {bad.certificate});
  CHECK((y * a).is_zero());
  CHECK(bad.certificate[0] * 1 + bad.certificate[1] * 3 != 0);
}

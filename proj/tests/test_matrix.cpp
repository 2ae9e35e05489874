#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nijlie/matrix.hpp"
#include "support/oracle.hpp"
#include "support/generators.hpp"

using namespace nijlie;

namespace {

Matrix mat(int r, int c, std::initializer_list<long> vals) {
  Matrix m(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Rational(*it++);
  return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(rat_str(parse_rational("3/6")) == "1/2");
  CHECK(rat_str(parse_rational("-4/2")) == "-2");
  CHECK(rat_str(parse_rational("7")) == "7");
  CHECK(parse_rational("2/-4") == rat(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("rank on the spec examples") {
  CHECK(rank(Matrix::identity(2)) == 2);
  CHECK(rank(Matrix(2, 2)) == 0);
  CHECK(rank(mat(2, 2, {1, 2, 2, 4})) == 1);
}

TEST_CASE("kernel basis on the spec examples") {
  CHECK(kernel_basis(Matrix::identity(2)).cols == 0);

  Matrix m = mat(1, 2, {1, 0});
  Matrix k = kernel_basis(m);
  REQUIRE(k.cols == 1);
  CHECK(sgn(k.at(0, 0)) == 0);
  CHECK(sgn(k.at(1, 0)) != 0);

  Matrix m2 = mat(2, 2, {1, 2, 2, 4});
  Matrix k2 = kernel_basis(m2);
  REQUIRE(k2.cols == 1);
  // proportional to (2, -1)
  CHECK(k2.at(0, 0) * Rational(-1) == k2.at(1, 0) * Rational(2));
  CHECK((m2 * k2).is_zero());
}

TEST_CASE("solve on the spec examples") {
  auto x = solve(Matrix::identity(2), {Rational(3), Rational(5)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(3));
  CHECK((*x)[1] == Rational(5));

  auto y = solve(Matrix(2, 2), {Rational(0), Rational(0)});
  REQUIRE(y.has_value());

  auto z = solve(mat(2, 2, {1, 2, 2, 4}), {Rational(1), Rational(3)});
  CHECK(!z.has_value());
}

TEST_CASE("rank + kernel dimension = cols, and exactness, on random matrices") {
  testgen::Rng rng(20240901);
  for (int trial = 0; trial < 60; ++trial) {
    int r = rng.uniform(0, 5), c = rng.uniform(0, 5);
    Matrix m(r, c);
    for (auto& v : m.a) v = rng.small_rational();
    int rk = rank(m);
    Matrix k = kernel_basis(m);
    CHECK(rk + k.cols == c);
    if (k.cols > 0) CHECK((m * k).is_zero());
    // the independent Gauss-Jordan oracle must agree
    CHECK(oracle::rank(m) == rk);
    CHECK(oracle::kernel(m).cols == k.cols);
    // a solvable system solves exactly
    Vec target = zero_vec(r);
    if (c > 0) {
      Vec coeffs(static_cast<std::size_t>(c));
      for (auto& v : coeffs) v = rng.small_rational();
      target = m.apply(coeffs);
    }
    auto sol = solve(m, target);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == target);
  }
}

TEST_CASE("solve detects inconsistency exactly") {
  testgen::Rng rng(77);
  int found_inconsistent = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int r = rng.uniform(1, 4), c = rng.uniform(1, 4);
    Matrix m(r, c);
    for (auto& v : m.a) v = rng.small_rational();
    Vec b(static_cast<std::size_t>(r));
    for (auto& v : b) v = rng.small_rational();
    auto sol = solve(m, b);
    if (sol) {
      CHECK(m.apply(*sol) == b);
    } else {
      ++found_inconsistent;
      // rank([A|b]) > rank(A) by the oracle
      Matrix aug = hstack(m, Matrix::from_cols({b}));
      CHECK(oracle::rank(aug) == oracle::rank(m) + 1);
    }
  }
  CHECK(found_inconsistent > 0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nijlie/fixtures.hpp"
#include "nijlie/multilinear.hpp"
#include "support/generators.hpp"
#include "support/oracle.hpp"

using namespace nijlie;
using namespace nijlie::fixtures;

namespace {

AltMap mu_of(const LieAlgebra& L) {
  AltMap mu(2, L.dim, L.dim);
  for (int i = 0; i < L.dim; ++i)
    for (int j = i + 1; j < L.dim; ++j) mu.set_coeff({i, j}, L.structure(i, j));
  return mu;
}

}  // namespace

TEST_CASE("AltMap evaluation is antisymmetric and handles repeats") {
  AltMap f(2, 3, 3);
  f.set_coeff({0, 1}, unit_vec(3, 2));  // f(e1,e2) = e3
  CHECK(f.eval_indices({1, 0}) == negate(unit_vec(3, 2)));
  CHECK(is_zero(f.eval_indices({1, 1})));
  CHECK(f.eval({unit_vec(3, 1), unit_vec(3, 0)}) == negate(unit_vec(3, 2)));
  testgen::Rng rng(3);
  Vec x = rng.vec(3);
  CHECK(is_zero(f.eval({x, x})));
  // identity as an arity-1 table
  AltMap id = AltMap::from_matrix(Matrix::identity(3));
  CHECK(id.eval({x}) == x);
}

TEST_CASE("insertion with the identity and with arity-1 maps") {
  testgen::Rng rng(11);
  AltMap id = AltMap::from_matrix(Matrix::identity(2));
  for (int arity = 1; arity <= 2; ++arity) {
    AltMap q = testgen::random_altmap(rng, arity, 2, 2);
    // i_Id Q = n Q
    CHECK(insertion(id, q) == q * Rational(arity));
  }
  // Q arity 1: i_P Q = Q ∘ P
  AltMap p = testgen::random_altmap(rng, 2, 3, 3);
  Matrix qm = rng.matrix(3, 3);
  AltMap composed = insertion(p, AltMap::from_matrix(qm));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      CHECK(composed.eval_indices({i, j}) == qm.apply(p.eval_indices({i, j})));
}

TEST_CASE("[mu, mu]_NR vanishes exactly for every valid Lie algebra") {
  for (const LieAlgebra& L : {abelian(2), aff1(), heisenberg3(), sl2(), n4()}) {
    AltMap mu = mu_of(L);
    CHECK(insertion(mu, mu).is_zero());  // Jacobi via shuffles
    CHECK(nr_bracket(mu, mu).is_zero());
  }
}

TEST_CASE("NR bracket: graded antisymmetry and the arity-1 commutator") {
  testgen::Rng rng(12);
  for (int t = 0; t < 10; ++t) {
    int m = rng.uniform(1, 2), n = rng.uniform(1, 2);
    AltMap p = testgen::random_altmap(rng, m, 3, 3);
    AltMap q = testgen::random_altmap(rng, n, 3, 3);
    int sign = (((m - 1) * (n - 1)) % 2 == 0) ? 1 : -1;
    CHECK(nr_bracket(p, q) == nr_bracket(q, p) * Rational(-sign));
  }
  Matrix P = rng.matrix(2, 2), Q = rng.matrix(2, 2);
  AltMap br = nr_bracket(AltMap::from_matrix(P), AltMap::from_matrix(Q));
  CHECK(br.to_matrix() == Q * P - P * Q);
}

TEST_CASE("NR bracket satisfies the graded Leibniz identity (brute force)") {
  testgen::Rng rng(13);
  for (int t = 0; t < 8; ++t) {
    int mp = rng.uniform(1, 2), mq = rng.uniform(1, 2), mr = rng.uniform(1, 2);
    AltMap p = testgen::random_altmap(rng, mp, 3, 3);
    AltMap q = testgen::random_altmap(rng, mq, 3, 3);
    AltMap r = testgen::random_altmap(rng, mr, 3, 3);
    // [P,[Q,R]] = [[P,Q],R] + (-1)^{pq} [Q,[P,R]], degrees = arity - 1
    AltMap lhs = nr_bracket(p, nr_bracket(q, r));
    AltMap rhs = nr_bracket(nr_bracket(p, q), r);
    int sg = ((mp - 1) * (mq - 1)) % 2 == 0 ? 1 : -1;
    rhs = rhs + nr_bracket(q, nr_bracket(p, r)) * Rational(sg);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("cup product basics") {
  testgen::Rng rng(14);
  LieAlgebra ab = abelian(3);
  AltMap p = testgen::random_altmap(rng, 1, 3, 3);
  AltMap q = testgen::random_altmap(rng, 2, 3, 3);
  CHECK(cup_product(ab, p, q).is_zero());

  LieAlgebra L = aff1();
  AltMap id = AltMap::from_matrix(Matrix::identity(2));
  AltMap cup = cup_product(L, id, id);
  CHECK(cup.eval_indices({0, 1}) == scale(2, L.structure(0, 1)));
}

TEST_CASE("cup product graded antisymmetry P v Q = -(-1)^{mn} Q v P (derived by brute force)") {
  testgen::Rng rng(15);
  for (int t = 0; t < 10; ++t) {
    int m = rng.uniform(1, 2), n = rng.uniform(1, 2);
    LieAlgebra L = testgen::catalog_algebra(rng, 2 + rng.uniform(0, 1));
    AltMap p = testgen::random_altmap(rng, m, L.dim, L.dim);
    AltMap q = testgen::random_altmap(rng, n, L.dim, L.dim);
    int sign = ((m * n) % 2 == 0) ? 1 : -1;
    CHECK(cup_product(L, p, q) == cup_product(L, q, p) * Rational(-sign));
  }
}

TEST_CASE("CE differential: degree 0 table on aff1") {
  Representation ad = adjoint_rep(aff1());
  AltMap v(0, 2, 2);
  v.set_coeff({}, unit_vec(2, 1));  // v = e2
  AltMap dv = ce_differential(ad, v);
  CHECK(dv.eval_indices({0}) == unit_vec(2, 1));  // (d e2)(e1) = [e1, e2] = e2
  CHECK(is_zero(dv.eval_indices({1})));
  CHECK(ce_differential(ad, AltMap(1, 2, 2)).is_zero());
}

TEST_CASE("CE differential squares to zero and equals -[mu, f]_NR on adjoint coefficients") {
  testgen::Rng rng(16);
  for (int t = 0; t < 12; ++t) {
    LieAlgebra L = testgen::catalog_algebra(rng, rng.uniform(2, 3));
    Representation ad = adjoint_rep(L);
    AltMap mu = mu_of(L);
    for (int arity = 0; arity <= 2; ++arity) {
      AltMap f = testgen::random_altmap(rng, arity, L.dim, L.dim);
      AltMap df = ce_differential(ad, f);
      CHECK(ce_differential(ad, df).is_zero());
      if (arity >= 1) CHECK(df == -nr_bracket(mu, f));
    }
  }
}

TEST_CASE("FN bracket of two operators matches the displayed expansion") {
  testgen::Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    LieAlgebra L = testgen::catalog_algebra(rng, rng.uniform(2, 3));
    int d = L.dim;
    Matrix N = rng.matrix(d, d), M = rng.matrix(d, d);
    AltMap fn = fn_bracket(L, AltMap::from_matrix(N), AltMap::from_matrix(M));
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        Vec x = unit_vec(d, i), y = unit_vec(d, j);
        Vec expect = L.bracket(N.col(i), M.col(j));
        add_to(expect, L.bracket(M.col(i), N.col(j)));
        Vec t1 = L.bracket(N.col(i), y);
        add_to(t1, L.bracket(x, N.col(j)));
        add_to(t1, negate(N.apply(L.structure(i, j))));
        add_to(expect, negate(M.apply(t1)));
        Vec t2 = L.bracket(M.col(i), y);
        add_to(t2, L.bracket(x, M.col(j)));
        add_to(t2, negate(M.apply(L.structure(i, j))));
        add_to(expect, negate(N.apply(t2)));
        CHECK(fn.eval_indices({i, j}) == expect);
      }
  }
}

TEST_CASE("FN bracket: identity operator and abelian algebras") {
  for (const LieAlgebra& L : {aff1(), heisenberg3(), sl2()}) {
    AltMap id = AltMap::from_matrix(Matrix::identity(L.dim));
    CHECK(fn_bracket(L, id, id).is_zero());
  }
  LieAlgebra ab = abelian(3);
  testgen::Rng rng(22);
  AltMap p = testgen::random_altmap(rng, 1, 3, 3);
  AltMap q = testgen::random_altmap(rng, 2, 3, 3);
  CHECK(fn_bracket(ab, p, q).is_zero());
}

TEST_CASE("FN bracket graded antisymmetry") {
  testgen::Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    LieAlgebra L = testgen::catalog_algebra(rng, 3);
    int m = rng.uniform(1, 2), n = rng.uniform(1, 2);
    AltMap p = testgen::random_altmap(rng, m, 3, 3);
    AltMap q = testgen::random_altmap(rng, n, 3, 3);
    int sign = ((m * n) % 2 == 0) ? 1 : -1;
    CHECK(fn_bracket(L, p, q) == fn_bracket(L, q, p) * Rational(-sign));
  }
}

TEST_CASE("delta_CE([P,Q]_FN) = [delta_CE P, delta_CE Q]_NR") {
  testgen::Rng rng(24);
  for (int t = 0; t < 12; ++t) {
    LieAlgebra L = testgen::catalog_algebra(rng, rng.uniform(2, 3));
    Representation ad = adjoint_rep(L);
    int m = rng.uniform(1, 2), n = rng.uniform(1, 2);
    AltMap p = testgen::random_altmap(rng, m, L.dim, L.dim);
    AltMap q = testgen::random_altmap(rng, n, L.dim, L.dim);
    AltMap lhs = ce_differential(ad, fn_bracket(L, p, q));
    AltMap rhs = nr_bracket(ce_differential(ad, p), ce_differential(ad, q));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("CE cohomology: Whitehead vanishing for sl2, dual elimination routes") {
  Representation ad = adjoint_rep(sl2());
  CochainComplexReport rep = ce_cohomology(ad, 3);
  for (int n = 0; n <= 3; ++n) {
    CHECK(rep.at(n).dim_h == 0);
    // independent Gauss-Jordan route
    int kn = rep.at(n).dim_cochains - oracle::rank(rep.at(n).d);
    int im = (n == 0) ? 0 : oracle::rank(rep.at(n - 1).d);
    CHECK(kn - im == 0);
  }
}

TEST_CASE("CE cohomology of abelian and aff1") {
  CochainComplexReport ab = ce_cohomology(adjoint_rep(abelian(2)), 2);
  CHECK(ab.h_dims() == std::vector<int>{2, 4, 2});  // C(2,n)*2
  CochainComplexReport aff = ce_cohomology(adjoint_rep(aff1()), 1);
  CHECK(aff.at(0).dim_h == 0);  // center of aff1 is 0
}

TEST_CASE("cochain spaces above the dimension vanish") {
  CochainComplexReport rep = ce_cohomology(adjoint_rep(abelian(2)), 3);
  CHECK(rep.at(3).dim_cochains == 0);
  CHECK(rep.at(3).dim_h == 0);
}

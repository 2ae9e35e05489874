#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nijlie/deformation.hpp"
#include "nijlie/fixtures.hpp"
#include "support/generators.hpp"

using namespace nijlie;
using namespace nijlie::fixtures;

namespace {

// random 2-cocycle of the cone complex (adjoint coefficients)
ConeCochain random_cocycle(testgen::Rng& rng, const NijenhuisPair& p) {
  NijenhuisRep nrep = adjoint_nijenhuis_rep(p);
  Matrix kern = kernel_basis(nlie_matrix(p, nrep, 2));
  Vec combo = zero_vec(kern.rows);
  for (int c = 0; c < kern.cols; ++c) add_scaled(combo, rng.small_int(), kern.col(c));
  return cone_from_flat(2, p.L.dim, p.L.dim, combo);
}

}  // namespace

TEST_CASE("order-0 truncations are always valid") {
  testgen::Rng rng(70);
  NijenhuisPair p = testgen::random_pair(rng, 3);
  CHECK(check_truncated({p, {}, {}}).ok());
}

TEST_CASE("order-1 validity equals the 2-cocycle condition (two code paths)") {
  testgen::Rng rng(71);
  int valid_seen = 0, invalid_seen = 0;
  for (int t = 0; t < 20; ++t) {
    NijenhuisPair p = testgen::random_pair(rng, rng.uniform(2, 3));
    NijenhuisRep nrep = adjoint_nijenhuis_rep(p);
    int d = p.L.dim;
    AltMap mu1 = testgen::random_altmap(rng, 2, d, d);
    Matrix n1 = rng.matrix(d, d);
    TruncatedDeformation def{p, {mu1}, {n1}};
    bool truncated_ok = check_truncated(def).ok();
    bool cocycle_ok = certify_2cocycle(p, nrep, mu1, AltMap::from_matrix(n1)).ok();
    CHECK(truncated_ok == cocycle_ok);
    (truncated_ok ? valid_seen : invalid_seen)++;
  }
  CHECK(invalid_seen > 0);
}

TEST_CASE("mu_1 = 0, N_1 = N is a valid order-1 deformation") {
  testgen::Rng rng(72);
  NijenhuisPair p = testgen::random_pair(rng, 3);
  TruncatedDeformation def{p, {AltMap(2, 3, 3)}, {p.N}};
  CHECK(check_truncated(def).ok());
}

TEST_CASE("cocycles and infinitesimal deformations convert both ways") {
  testgen::Rng rng(73);
  for (int t = 0; t < 10; ++t) {
    NijenhuisPair p = testgen::random_pair(rng, rng.uniform(2, 3));
    ConeCochain c = random_cocycle(rng, p);
    TruncatedDeformation def = cocycle_to_infinitesimal(p, c.chi, *c.F);
    CHECK(check_truncated(def).ok());
    ConeCochain back = infinitesimal_to_cocycle(def);
    CHECK(back.chi == c.chi);
    CHECK(*back.F == *c.F);
    CHECK(certify_2cocycle(p, adjoint_nijenhuis_rep(p), back.chi, *back.F).ok());
  }
}

TEST_CASE("trivial-cocycle deformations are equivalent to the trivial deformation") {
  testgen::Rng rng(74);
  for (int t = 0; t < 10; ++t) {
    NijenhuisPair p = testgen::random_pair(rng, rng.uniform(2, 3));
    int d = p.L.dim;
    NijenhuisRep nrep = adjoint_nijenhuis_rep(p);
    Matrix phi1 = rng.matrix(d, d);
    ConeCochain img = nlie_differential(p, nrep, ConeCochain{AltMap::from_matrix(phi1), std::nullopt});
    TruncatedDeformation trivial{p, {AltMap(2, d, d)}, {Matrix(d, d)}};
    TruncatedDeformation shifted{p, {img.chi}, {img.F->to_matrix()}};
    REQUIRE(check_truncated(shifted).ok());
    // phi_t = Id + t phi1 transports `shifted` to `trivial`
    CHECK(check_equivalence(shifted, trivial, TruncatedEquivalence{{phi1}}).ok());
    // identical deformations are equivalent via phi = 0
    CHECK(check_equivalence(shifted, shifted, TruncatedEquivalence{{Matrix(d, d)}}).ok());
  }
}

TEST_CASE("equivalence witness exists iff the cocycle difference is a coboundary") {
  testgen::Rng rng(75);
  int with = 0, without = 0;
  for (int t = 0; t < 16; ++t) {
    NijenhuisPair p = testgen::random_pair(rng, rng.uniform(2, 3));
    int d = p.L.dim;
    NijenhuisRep nrep = adjoint_nijenhuis_rep(p);
    ConeCochain a = random_cocycle(rng, p);
    ConeCochain b;
    if (t % 2 == 0) {  // cohomologous by construction
      ConeCochain img = nlie_differential(
          p, nrep, ConeCochain{AltMap::from_matrix(rng.matrix(d, d)), std::nullopt});
      b = ConeCochain{a.chi - img.chi, *a.F - *img.F};
    } else {
      b = random_cocycle(rng, p);
    }
    TruncatedDeformation da{p, {a.chi}, {a.F->to_matrix()}};
    TruncatedDeformation db{p, {b.chi}, {b.F->to_matrix()}};
    auto witness = equivalence_witness(da, db);
    bool cob = certify_2coboundary(p, nrep, a.chi - b.chi,
                                   *a.F - *b.F).has_value();
    CHECK(witness.has_value() == cob);
    if (witness) {
      ++with;
      CHECK(check_equivalence(da, db, *witness).ok());
    } else {
      ++without;
    }
  }
  CHECK(with > 0);
  // identical deformations give the zero witness
  NijenhuisPair p{aff1(), ndiag(rat(1), rat(2))};
  ConeCochain c = random_cocycle(rng, p);
  TruncatedDeformation d1{p, {c.chi}, {c.F->to_matrix()}};
  auto w = equivalence_witness(d1, d1);
  REQUIRE(w.has_value());
  CHECK(w->phi_terms[0].is_zero());
}

TEST_CASE("a nonzero class admits no equivalence with the trivial deformation") {
  // abelian algebra with zero operator: the cone differential vanishes, so
  // every 2-cochain is a cocycle and only 0 is a coboundary
  LieAlgebra ab = abelian(2);
  NijenhuisPair p{ab, Matrix(2, 2)};
  AltMap chi(2, 2, 2);
  chi.set_coeff({0, 1}, unit_vec(2, 0));
  TruncatedDeformation da{p, {chi}, {Matrix(2, 2)}};
  TruncatedDeformation trivial{p, {AltMap(2, 2, 2)}, {Matrix(2, 2)}};
  REQUIRE(check_truncated(da).ok());
  CHECK(!equivalence_witness(da, trivial).has_value());
  // and a purported equivalence is rejected with a located witness
  auto rep = check_equivalence(da, trivial, TruncatedEquivalence{{Matrix(2, 2)}});
  CHECK(!rep.ok());
}

TEST_CASE("higher-order truncation: extending a valid order-1 with its obstruction witness") {
  testgen::Rng rng(76);
  for (int t = 0; t < 6; ++t) {
    NijenhuisPair p = testgen::random_pair(rng, rng.uniform(2, 3));
    int d = p.L.dim;
    // operator-only deformation: mu_i = 0 reduces to the order-n operator theory
    Matrix kern = kernel_basis(dN_matrix(p, 1));
    if (kern.cols == 0) continue;
    Vec combo = zero_vec(kern.rows);
    for (int c = 0; c < kern.cols; ++c) add_scaled(combo, rng.small_int(), kern.col(c));
    Matrix n1 = AltMap::from_flat(1, d, d, combo).to_matrix();
    auto ob = obstruction({p, {n1}});
    if (!ob.witness) continue;
    TruncatedDeformation def{p, {AltMap(2, d, d), AltMap(2, d, d)}, {n1, *ob.witness}};
    CHECK(check_truncated(def).ok());
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nijlie/fixtures.hpp"
#include "nijlie/cone.hpp"
#include "nijlie/json_io.hpp"
#include "support/generators.hpp"

using namespace nijlie;
using namespace nijlie::fixtures;

TEST_CASE("matrix round trip and schema validation") {
  testgen::Rng rng(110);
  for (int t = 0; t < 10; ++t) {
    Matrix m = rng.matrix(rng.uniform(0, 3), rng.uniform(0, 3));
    CHECK(matrix_from_json(to_json(m)) == m);
  }
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":1})")), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":2,"entries":[["1"]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows":1,"cols":1,"entries":[["1/0"]]})")),
                  std::invalid_argument);
}

TEST_CASE("algebra round trip preserves structure constants exactly") {
  testgen::Rng rng(111);
  for (const LieAlgebra& L : {abelian(2), aff1(), heisenberg3(), sl2(), n4(),
                              testgen::random_pair(rng, 4).L}) {
    LieAlgebra back = lie_from_json(to_json(L));
    CHECK(back.dim == L.dim);
    CHECK(back.c == L.c);
  }
  // antisymmetry is filled in on load: only i < j keys are accepted
  json bad = json::parse(R"({"dim":2,"bracket":{"2,1":{"1":"1"}}})");
  CHECK_THROWS_AS(lie_from_json(bad), std::invalid_argument);
  json bad2 = json::parse(R"({"dim":2,"bracket":{"1,3":{"1":"1"}}})");
  CHECK_THROWS_AS(lie_from_json(bad2), std::invalid_argument);
}

TEST_CASE("altmap round trip") {
  testgen::Rng rng(112);
  for (int t = 0; t < 8; ++t) {
    AltMap f = testgen::random_altmap(rng, rng.uniform(0, 3), rng.uniform(2, 4), rng.uniform(1, 3));
    CHECK(altmap_from_json(to_json(f)) == f);
  }
  CHECK_THROWS_AS(
      altmap_from_json(json::parse(R"({"arity":2,"dim":3,"targetDim":1,"coeffs":{"2,1":["1"]}})")),
      std::invalid_argument);
}

TEST_CASE("representation, cobracket, tensor, nslie round trips") {
  testgen::Rng rng(113);
  LieAlgebra L = sl2();
  Representation rep = adjoint_rep(L);
  Representation back = rep_from_json(to_json(rep, L), L);
  CHECK(back.dimV == rep.dimV);
  for (std::size_t i = 0; i < rep.rho.size(); ++i) CHECK(back.rho[i] == rep.rho[i]);

  Cobracket co = dualize_algebra(sl2());
  CHECK(cobracket_from_json(to_json(co)) == co);

  Tensor2 r = r_aff();
  CHECK(tensor2_from_json(to_json(r)) == r);

  NSLie P = induce_from_nijenhuis({aff1(), ndiag(rat(2), rat(3))});
  CHECK(nslie_from_json(to_json(P)) == P);

  NSRep R = adjoint_nsrep(P);
  NSRep backR = nsrep_from_json(to_json(R));
  CHECK(backR.dimV == R.dimV);
  for (std::size_t i = 0; i < R.l.size(); ++i) {
    CHECK(backR.l[i] == R.l[i]);
    CHECK(backR.r[i] == R.r[i]);
    CHECK(backR.psi[i] == R.psi[i]);
  }
}

TEST_CASE("two-term, homotopy operator, matched pair, crossed module round trips") {
  NijenhuisPair p{aff1(), ndiag(rat(1), rat(4))};
  CrossedModuleNLie cm{p, p, Matrix::identity(2), adjoint_rep(p.L).rho};
  auto [T, HN] = crossed_to_strict(cm);
  TwoTermL backT = two_term_from_json(to_json(T));
  CHECK(backT.d == T.d);
  CHECK(backT.l2_00 == T.l2_00);
  CHECK(backT.l3 == T.l3);
  for (std::size_t i = 0; i < T.l2_01.size(); ++i) CHECK(backT.l2_01[i] == T.l2_01[i]);
  HomotopyNijenhuis backH = homotopy_nijenhuis_from_json(to_json(HN), T);
  CHECK(backH.N0 == HN.N0);
  CHECK(backH.N1 == HN.N1);
  CHECK(backH.N2 == HN.N2);

  CrossedModuleNLie backC = crossed_module_from_json(to_json(cm));
  CHECK(backC.g.L == cm.g.L);
  CHECK(backC.t == cm.t);

  Cobracket co = coboundary_cobracket(aff1(), r_aff());
  MatchedPairData mp = bialgebra_matched_pair(aff1(), Matrix::identity(2), co, Matrix::identity(2));
  MatchedPairData backM = matched_pair_from_json(to_json(mp));
  CHECK(backM.g == mp.g);
  CHECK(backM.h == mp.h);
  CHECK(*backM.N == *mp.N);
  for (std::size_t i = 0; i < mp.rho.size(); ++i) CHECK(backM.rho[i] == mp.rho[i]);

  NSMatchedPair nsmp = matched_pair_from_nijenhuis(mp);
  NSMatchedPair backNS = ns_matched_pair_from_json(to_json(nsmp));
  CHECK(backNS.p1 == nsmp.p1);
  CHECK(backNS.p2 == nsmp.p2);
  for (std::size_t i = 0; i < nsmp.l.size(); ++i) CHECK(backNS.l[i] == nsmp.l[i]);
}

TEST_CASE("serialized JSON is byte-identical across dumps") {
  LieAlgebra L = sl2();
  CHECK(to_json(L).dump(2) == to_json(sl2()).dump(2));
  Cobracket co = coboundary_cobracket(aff1(), r_aff());
  CHECK(to_json(co).dump() == to_json(co).dump());
}

TEST_CASE("rationals serialize canonically") {
  Matrix m(1, 1);
  m.at(0, 0) = rat(4, 6);
  json j = to_json(m);
  CHECK(j["entries"][0][0].get<std::string>() == "2/3");
  // integer JSON values are accepted on input
  json alt = json::parse(R"({"rows":1,"cols":1,"entries":[[7]]})");
  CHECK(matrix_from_json(alt).at(0, 0) == Rational(7));
}

TEST_CASE("cone cochain round trip") {
  NijenhuisPair p{heisenberg3(), nnilp()};
  NijenhuisRep nrep = adjoint_nijenhuis_rep(p);
  testgen::Rng rng(114);
  ConeCochain c{testgen::random_altmap(rng, 2, 3, 3), testgen::random_altmap(rng, 1, 3, 3)};
  ConeCochain back = cone_cochain_from_json(to_json(c));
  CHECK(back.chi == c.chi);
  CHECK(*back.F == *c.F);
  ConeCochain deg1{testgen::random_altmap(rng, 1, 3, 3), std::nullopt};
  ConeCochain back1 = cone_cochain_from_json(to_json(deg1));
  CHECK(back1.chi == deg1.chi);
  CHECK(!back1.F.has_value());
  CHECK_THROWS_AS(
      cone_cochain_from_json(json::parse(
          R"({"degree":2,"chi":{"arity":2,"dim":2,"targetDim":1,"coeffs":{}}})")),
      std::invalid_argument);
}

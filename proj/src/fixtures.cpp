#include "nijlie/fixtures.hpp"

#include "nijlie/representation.hpp"

namespace nijlie::fixtures {

LieAlgebra abelian(int d) { return LieAlgebra(d); }

LieAlgebra aff1() {
  LieAlgebra L(2);
  L.set_bracket(0, 1, unit_vec(2, 1));
  L.labels = {"e1", "e2"};
  return L;
}

LieAlgebra heisenberg3() {
  LieAlgebra L(3);
  L.set_bracket(0, 1, unit_vec(3, 2));
  L.labels = {"e1", "e2", "e3"};
  return L;
}

LieAlgebra sl2() {
  LieAlgebra L(3);
  L.set_bracket(0, 1, scale(2, unit_vec(3, 1)));   // [h,e] = 2e
  L.set_bracket(0, 2, scale(-2, unit_vec(3, 2)));  // [h,f] = -2f
  L.set_bracket(1, 2, unit_vec(3, 0));             // [e,f] = h
  L.labels = {"h", "e", "f"};
  return L;
}

LieAlgebra r3(const Rational& lambda) {
  LieAlgebra L(3);
  L.set_bracket(0, 1, unit_vec(3, 1));
  L.set_bracket(0, 2, scale(lambda, unit_vec(3, 2)));
  return L;
}

LieAlgebra n4() {
  LieAlgebra L(4);
  L.set_bracket(0, 1, unit_vec(4, 2));
  L.set_bracket(0, 2, unit_vec(4, 3));
  return L;
}

LieAlgebra aff1_semidirect_adjoint() {
  LieAlgebra L = aff1();
  return semidirect(L, adjoint_rep(L));
}

Matrix ndiag(const Rational& a, const Rational& b) {
  Matrix m(2, 2);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  return m;
}

Matrix nnilp() {
  Matrix m(3, 3);
  m.at(2, 0) = 1;  // e1 -> e3
  return m;
}

Tensor2 r_aff() {
  Tensor2 r(2);
  r.at(0, 1) = 1;
  r.at(1, 0) = -1;
  return r;
}

}  // namespace nijlie::fixtures

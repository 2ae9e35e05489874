#ifndef NIJLIE_FIXTURES_HPP
#define NIJLIE_FIXTURES_HPP

#include "nijlie/lie_algebra.hpp"
#include "nijlie/tensor.hpp"

namespace nijlie::fixtures {

/// Abelian algebra of the given dimension.
LieAlgebra abelian(int d);
/// 2-dim non-abelian: [e1, e2] = e2.
LieAlgebra aff1();
/// Heisenberg: [e1, e2] = e3.
LieAlgebra heisenberg3();
/// sl2 in the basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2();
/// Solvable r3(lambda): [e1,e2] = e2, [e1,e3] = lambda e3.
LieAlgebra r3(const Rational& lambda);
/// 4-dim filiform nilpotent: [e1,e2] = e3, [e1,e3] = e4.
LieAlgebra n4();
/// aff1 ⋉ adjoint, 4-dimensional.
LieAlgebra aff1_semidirect_adjoint();

/// diag(a, b); a Nijenhuis operator on aff1 for every a, b.
Matrix ndiag(const Rational& a, const Rational& b);
/// Nilpotent Nijenhuis operator on heisenberg3: e1 -> e3, e2, e3 -> 0.
Matrix nnilp();
/// r = e1 (x) e2 - e2 (x) e1 on aff1; solves the CYBE.
Tensor2 r_aff();

}  // namespace nijlie::fixtures

#endif

#ifndef NIJLIE_REPRESENTATION_HPP
#define NIJLIE_REPRESENTATION_HPP

#include "nijlie/lie_algebra.hpp"

namespace nijlie {

/// Representation rho: g -> End(V), one matrix per basis vector of g.
struct Representation {
  LieAlgebra base;
  int dimV = 0;
  std::vector<Matrix> rho;

  /// Action of an arbitrary element x of g.
  Matrix action(const Vec& x) const;
  Vec act(int i, const Vec& v) const { return rho[static_cast<std::size_t>(i)].apply(v); }
};

/// Nijenhuis representation data (V, rho, S).
struct NijenhuisRep {
  Representation rep;
  Matrix S;
};

CheckReport check_representation(const Representation& rep);

Representation adjoint_rep(const LieAlgebra& L);
Representation trivial_rep(const LieAlgebra& L, int dimV);
/// (rho*_x alpha)(v) = -<alpha, rho_x v>; matrices are negated transposes.
Representation dual_rep(const Representation& rep);

/// Semidirect product g ⋉ V with [(x,u),(y,v)] = ([x,y], rho_x v - rho_y u).
LieAlgebra semidirect(const LieAlgebra& L, const Representation& rep);

/// Violations of rho_{N(x)} S(v) = S(rho_{N(x)} v + rho_x S(v) - S(rho_x v)).
CheckReport check_nijenhuis_rep(const LieAlgebra& L, const Matrix& N, const NijenhuisRep& nrep);

/// The triple (V, rho^l, S^k) of the power construction:
/// rho^l_x v = rho_{N^l x} v + rho_x S^l v - S^l rho_x v.
NijenhuisRep deformed_rep(const LieAlgebra& L, const Matrix& N, const NijenhuisRep& nrep, int k, int l);

}  // namespace nijlie

#endif

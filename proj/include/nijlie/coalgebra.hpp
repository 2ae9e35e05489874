#ifndef NIJLIE_COALGEBRA_HPP
#define NIJLIE_COALGEBRA_HPP

#include "nijlie/nijenhuis.hpp"
#include "nijlie/tensor.hpp"

namespace nijlie {

/// Lie cobracket delta: g -> g (x) g, one Tensor2 per basis vector.
struct Cobracket {
  int dim = 0;
  std::vector<Tensor2> delta;

  Cobracket() = default;
  explicit Cobracket(int d) : dim(d), delta(static_cast<std::size_t>(d), Tensor2(d)) {}

  Tensor2 eval(const Vec& x) const;
  bool operator==(const Cobracket& o) const = default;
};

/// Co-antisymmetry and co-Jacobi residuals per basis vector.
CheckReport check_coalgebra(const Cobracket& co);

/// Dual bracket <[a,b], x> = <delta(x), a (x) b> on g*.
LieAlgebra dualize_coalgebra(const Cobracket& co);
/// Dual cobracket <delta(eps_k), e_i (x) e_j> = <eps_k, [e_i, e_j]> on g*.
Cobracket dualize_algebra(const LieAlgebra& L);

/// Residuals of (S(x)S) delta(x) = (S(x)Id + Id(x)S) delta(Sx) - delta(S^2 x).
CheckReport check_coalgebra_nijenhuis(const Cobracket& co, const Matrix& S);

/// delta_S(x) = (S(x)Id + Id(x)S) delta(x) - delta(Sx).  Throws when S is
/// not Nijenhuis for the coalgebra.
Cobracket deformed_cobracket(const Cobracket& co, const Matrix& S);
Cobracket deformed_cobracket_unchecked(const Cobracket& co, const Matrix& S);

/// Residuals of S(rho_{Nx} v) + rho_x S^2 v = rho_{Nx} S v + S(rho_x S v).
CheckReport check_admissible(const LieAlgebra& L, const Matrix& N, const Representation& rep,
                             const Matrix& S_V);

}  // namespace nijlie

#endif

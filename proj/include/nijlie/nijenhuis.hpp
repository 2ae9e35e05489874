#ifndef NIJLIE_NIJENHUIS_HPP
#define NIJLIE_NIJENHUIS_HPP

#include <optional>

#include "nijlie/multilinear.hpp"

namespace nijlie {

/// Lie algebra with a distinguished Nijenhuis operator.
struct NijenhuisPair {
  LieAlgebra L;
  Matrix N;
};

/// Residuals of [Nx,Ny] = N([Nx,y] + [x,Ny] - N[x,y]) on basis pairs,
/// cross-checked against [N,N]_FN = 0 (the two must agree).
CheckReport check_nijenhuis(const LieAlgebra& L, const Matrix& N);

/// Deformed bracket [x,y]^N = [Nx,y] + [x,Ny] - N[x,y].
/// Throws when the pair is invalid.
LieAlgebra deformed_bracket(const NijenhuisPair& pair);
/// Same construction without validating the pair (for checkers).
LieAlgebra deformed_bracket_unchecked(const LieAlgebra& L, const Matrix& N);

/// N^k Nijenhuis on L, N^l Nijenhuis on L^{N^k}, and
/// ([.,.]^{N^k})^{N^l} = [.,.]^{N^{k+l}}.
CheckReport iterated_deformation_check(const NijenhuisPair& pair, int k, int l);

/// Differential of the Nijenhuis operator complex.  Arity 0 uses
/// d_N(x)(y) = [Ny, x] - N[y, x]; arity >= 1 the explicit expansion of
/// [N, f]_FN (the equality with fn_bracket is a tested property).
AltMap dN(const NijenhuisPair& pair, const AltMap& f);
Matrix dN_matrix(const NijenhuisPair& pair, int n);
CochainComplexReport nijenhuis_cohomology(const NijenhuisPair& pair, int up_to);

/// Phi_n(f) = (-1)^{n+1} delta_CE(f) with adjoint coefficients.
AltMap chain_map_phi(const LieAlgebra& L, const AltMap& f);

/// Relative Rota-Baxter operator r: V -> g:
/// [ru, rv] = r(rho_{ru} v - rho_{rv} u).
CheckReport check_relative_rb(const LieAlgebra& L, const Representation& rep, const Matrix& r);

/// Lift r~(x,v) = (rv, 0), a Nijenhuis operator on g ⋉ V.  Throws when the
/// Rota-Baxter check fails.
NijenhuisPair lift_rb(const LieAlgebra& L, const Representation& rep, const Matrix& r);

/// Differential of the relative Rota-Baxter complex on Hom(∧^n V, g).
AltMap dr(const LieAlgebra& L, const Representation& rep, const Matrix& r, const AltMap& f);

/// Embeds f in Hom(∧^n V, g) into Hom(∧^n (g⊕V), g⊕V).
AltMap embed_rb_cochain(const AltMap& f, int dim_g);

/// Order-n deformation N + t N_1 + ... + t^n N_n of the operator of `base`.
struct OrderNDeformation {
  NijenhuisPair base;
  std::vector<Matrix> terms;
};

/// Per-order residuals of d_N(N_p) = -1/2 sum_{i+j=p} [N_i, N_j]_FN.
CheckReport check_order_n(const OrderNDeformation& def);

struct ObstructionResult {
  AltMap ob;                      // -1/2 sum_{i+j=n+1} [N_i,N_j]_FN
  bool is_cocycle = false;        // d_N(ob) = 0, always true by the theory
  std::optional<Matrix> witness;  // N_{n+1} with d_N(N_{n+1}) = ob
};

ObstructionResult obstruction(const OrderNDeformation& def);

}  // namespace nijlie

#endif

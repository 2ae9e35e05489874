#ifndef NIJLIE_HOMOTOPY_HPP
#define NIJLIE_HOMOTOPY_HPP

#include "nijlie/cone.hpp"

namespace nijlie {

/// 2-term L-infinity algebra (L1 --d--> L0, l2, l3).  The mixed bracket is
/// stored as one matrix per basis vector of L0, with l2(h, x) = -l2(x, h)
/// applied at the boundary.
struct TwoTermL {
  int dim0 = 0, dim1 = 0;
  Matrix d;                    // L1 -> L0
  AltMap l2_00;                // ∧^2 L0 -> L0
  std::vector<Matrix> l2_01;   // l2(e_i, .): L1 -> L1
  AltMap l3;                   // ∧^3 L0 -> L1

  /// l2(x, h) for x in L0 and h in L1 (both as coordinate vectors).
  Vec l2_mix(const Vec& x, const Vec& h) const;
  /// L0 with the l2 bracket as structure constants (not validated).
  LieAlgebra skeleton_algebra() const;
  /// The action of L0 on L1 as a Representation (over skeleton_algebra).
  Representation rep_on_l1() const;
};

/// Homotopy Nijenhuis operator (N0, N1, N2).
struct HomotopyNijenhuis {
  Matrix N0, N1;
  AltMap N2;  // ∧^2 L0 -> L1
};

/// Representation of a 2-term L-infinity algebra on V1 -> V0.
struct TwoTermRep {
  int dimV0 = 0, dimV1 = 0;
  Matrix dbar;                // V1 -> V0
  std::vector<Matrix> m2_00;  // m2(e_i, .): V0 -> V0
  std::vector<Matrix> m2_01;  // m2(e_i, .): V1 -> V1
  std::vector<Matrix> m2_10;  // m2(f_a, .): V0 -> V1
  std::vector<Matrix> m3;     // m3(e_i, e_j, .): V0 -> V1, combos i < j

  Matrix m2_00_of(const Vec& x) const;
  Matrix m2_01_of(const Vec& x) const;
  Matrix m2_10_of(const Vec& h) const;
  Matrix m3_of(const Vec& x, const Vec& y) const;
};

CheckReport check_2term(const TwoTermL& T);
CheckReport check_homotopy_nijenhuis(const TwoTermL& T, const HomotopyNijenhuis& HN);
CheckReport check_2term_rep(const TwoTermL& T, const TwoTermRep& R);

/// Semidirect product on (L1 ⊕ V1) -> (L0 ⊕ V0).
TwoTermL semidirect_2term(const TwoTermL& T, const TwoTermRep& R);

/// Homotopy relative Rota-Baxter operator (r0, r1, r2); "c.p." in the
/// fourth identity means cyclic permutation of (u, v, w) over the whole
/// braced block.
CheckReport check_homotopy_rrb(const TwoTermL& T, const TwoTermRep& R, const Matrix& r0,
                               const Matrix& r1, const AltMap& r2);

/// Lift (r0, r1, r2) to the semidirect product, mirroring the strict case.
struct HomotopyLift {
  TwoTermL semidirect;
  HomotopyNijenhuis lifted;
};
HomotopyLift lift_homotopy_rrb(const TwoTermL& T, const TwoTermRep& R, const Matrix& r0,
                               const Matrix& r1, const AltMap& r2);

/// Skeletal (d = 0) data unpacked into a Nijenhuis pair, a Nijenhuis
/// representation and a degree-3 cone cocycle (l3, N2).
struct SkeletalData {
  NijenhuisPair pair;
  NijenhuisRep nrep;
  AltMap chi;  // arity 3
  AltMap F;    // arity 2
};

SkeletalData skeletal_to_cocycle(const TwoTermL& T, const HomotopyNijenhuis& HN);
std::pair<TwoTermL, HomotopyNijenhuis> cocycle_to_skeletal(const NijenhuisPair& pair,
                                                           const NijenhuisRep& nrep,
                                                           const AltMap& chi, const AltMap& F);

/// Crossed module of Nijenhuis Lie algebras.
struct CrossedModuleNLie {
  NijenhuisPair g, h;
  Matrix t;                 // h -> g
  std::vector<Matrix> rho;  // g acting on h by derivations
};

/// When check_operators is false only the plain Lie crossed-module axioms
/// are verified (used for the deformed-crossed-module property).
CheckReport check_crossed_module(const CrossedModuleNLie& cm, bool check_operators = true);

CrossedModuleNLie strict_to_crossed(const TwoTermL& T, const HomotopyNijenhuis& HN);
std::pair<TwoTermL, HomotopyNijenhuis> crossed_to_strict(const CrossedModuleNLie& cm);

}  // namespace nijlie

#endif

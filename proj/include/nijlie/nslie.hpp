#ifndef NIJLIE_NSLIE_HPP
#define NIJLIE_NSLIE_HPP

#include "nijlie/bialgebra.hpp"

namespace nijlie {

/// NS-Lie algebra (p, ◇, ⌊,⌋): ◇ a full bilinear table, ⌊,⌋ antisymmetric.
struct NSLie {
  int dim = 0;
  std::vector<Vec> diamond;  // diamond[i*dim + j] = e_i ◇ e_j
  AltMap floor;              // ∧^2 p -> p

  NSLie() = default;
  explicit NSLie(int d)
      : dim(d), diamond(static_cast<std::size_t>(d) * d, zero_vec(d)), floor(2, d, d) {}

  const Vec& dia(int i, int j) const { return diamond[static_cast<std::size_t>(i) * dim + j]; }
  void set_dia(int i, int j, const Vec& v) { diamond[static_cast<std::size_t>(i) * dim + j] = v; }
  Vec dia(const Vec& x, const Vec& y) const;
  Vec flo(const Vec& x, const Vec& y) const { return floor.eval({x, y}); }
  /// Subadjacent bracket [[x,y]] = x◇y - y◇x + ⌊x,y⌋.
  Vec dbl(const Vec& x, const Vec& y) const;

  bool operator==(const NSLie& o) const = default;
};

/// Residuals of (NSL1) and (NSL2) on basis triples.
CheckReport check_nslie(const NSLie& P);

/// x ◇ y = [Nx, y], ⌊x,y⌋ = -N[x,y].  Throws when the pair is invalid.
NSLie induce_from_nijenhuis(const NijenhuisPair& pair);

/// The subadjacent Lie algebra (p, [[.,.]]).
LieAlgebra subadjacent(const NSLie& P);

/// Representation (V, l, r, psi) of an NS-Lie algebra.
struct NSRep {
  int dimV = 0;
  std::vector<Matrix> l, r, psi;

  Matrix l_of(const Vec& x) const;
  Matrix r_of(const Vec& x) const;
  Matrix psi_of(const Vec& x) const;
};

CheckReport check_nsrep(const NSLie& P, const NSRep& R);

/// The adjoint (regular) representation l_x = x◇., r_x = .◇x, psi_x = ⌊x,.⌋.
NSRep adjoint_nsrep(const NSLie& P);

/// l_x v = rho_{Nx} v, r_x v = -rho_x S v, psi_x v = -S(rho_x v).
NSRep rep_from_nijenhuis_rep(const NijenhuisPair& pair, const NijenhuisRep& nrep);

NSLie semidirect_nslie(const NSLie& P, const NSRep& R);

struct NSMatchedPair {
  NSLie p1, p2;
  std::vector<Matrix> l, r, psi;  // p1 acting on p2
  std::vector<Matrix> L, R, Psi;  // p2 acting on p1
};

/// Both representation conditions plus the six compatibility identities
/// (mnsl1..mnsl6), each labeled.
CheckReport check_matched_pair_nslie(const NSMatchedPair& mp);

NSLie bicrossed_nslie(const NSMatchedPair& mp);
NSLie bicrossed_nslie_unchecked(const NSMatchedPair& mp);

/// NS matched pair induced from a matched pair of Nijenhuis Lie algebras.
NSMatchedPair matched_pair_from_nijenhuis(const MatchedPairData& nmp);

}  // namespace nijlie

#endif

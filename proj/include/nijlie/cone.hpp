#ifndef NIJLIE_CONE_HPP
#define NIJLIE_CONE_HPP

#include <optional>

#include "nijlie/nijenhuis.hpp"

namespace nijlie {

/// The comparison map of cochain complexes,
///   (∂^{N,S} f)(x_1..x_n) = sum over subsets I of (-1)^{|I|} S^{|I|} f(y),
/// where y_i = x_i for i in I and y_i = N(x_i) otherwise; identity in
/// degree 0.  Subset-sum route.
AltMap partial_NS(const Matrix& N, const Matrix& S, const AltMap& f);

/// Independent slot-recursive evaluation of the same map; kept as an
/// anti-bug oracle for the paper's elided middle terms.
AltMap partial_NS_expanded(const Matrix& N, const Matrix& S, const AltMap& f);

/// Differential of the relative complex Hom(∧^n g, V):
/// degree 0: (d v)(x) = rho_{N(x)} v - S(rho_x v).
AltMap dNS(const Representation& rep, const Matrix& N, const Matrix& S, const AltMap& f);
Matrix dNS_matrix(const Representation& rep, const Matrix& N, const Matrix& S, int n);

/// Cochain of the mapping cone:
///   degree 0: zero space; degree 1: chi in Hom(g,V);
///   degree n >= 2: (chi, F) in Hom(∧^n g, V) ⊕ Hom(∧^{n-1} g, V).
struct ConeCochain {
  AltMap chi;
  std::optional<AltMap> F;

  int degree() const { return chi.arity; }
  Vec flatten() const { return F ? concat(chi.flatten(), F->flatten()) : chi.flatten(); }
  bool is_zero() const { return chi.is_zero() && (!F || F->is_zero()); }
};

ConeCochain cone_zero(int degree, int dim, int dimV);
ConeCochain cone_from_flat(int degree, int dim, int dimV, const Vec& flat);
int cone_dim(int degree, int dim, int dimV);

/// delta_NLie(f) = (delta_CE f, -∂ f);
/// delta_NLie(chi, F) = (delta_CE chi, d_{N,S} F + (-1)^n ∂ chi).
ConeCochain nlie_differential(const NijenhuisPair& pair, const NijenhuisRep& nrep,
                              const ConeCochain& c);
Matrix nlie_matrix(const NijenhuisPair& pair, const NijenhuisRep& nrep, int n);
CochainComplexReport nlie_cohomology(const NijenhuisPair& pair, const NijenhuisRep& nrep,
                                     int up_to);

/// The adjoint Nijenhuis representation (g, ad, N).
NijenhuisRep adjoint_nijenhuis_rep(const NijenhuisPair& pair);

/// The two explicit 2-cocycle identities, evaluated directly from their
/// expanded forms (independent of the generic differential machinery).
CheckReport certify_2cocycle(const NijenhuisPair& pair, const NijenhuisRep& nrep,
                             const AltMap& chi, const AltMap& F);

/// phi with chi = delta_CE(phi) and F = S∘phi - phi∘N, when the class
/// vanishes.  Requires certify_2cocycle to pass.
std::optional<Matrix> certify_2coboundary(const NijenhuisPair& pair, const NijenhuisRep& nrep,
                                          const AltMap& chi, const AltMap& F);

/// Short exact sequence 0 -> Hom(∧^{n-1}g,V) -> C^n_NLie -> Hom(∧^n g,V) -> 0
/// and the induced window H^2(N;S) -> H^3_NLie -> H^3_CE -> H^3(N;S).
struct ExactSequenceReport {
  bool chain_maps_commute = false;
  bool i_injective = false;
  bool p_surjective = false;
  bool middle_exact = false;  // ker p = im i degreewise
  bool window_composes_to_zero = false;
  bool window_exact = false;  // rank(incoming) = dim ker(outgoing)
  std::vector<int> h_nlie, h_ce, h_ns;
  bool ok() const {
    return chain_maps_commute && i_injective && p_surjective && middle_exact &&
           window_composes_to_zero && window_exact;
  }
};

ExactSequenceReport exact_sequence_report(const NijenhuisPair& pair, const NijenhuisRep& nrep,
                                          int up_to);

}  // namespace nijlie

#endif

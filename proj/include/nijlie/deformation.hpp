#ifndef NIJLIE_DEFORMATION_HPP
#define NIJLIE_DEFORMATION_HPP

#include "nijlie/cone.hpp"

namespace nijlie {

/// Truncated formal deformation (mu_t, N_t) of a Nijenhuis Lie algebra,
/// mod t^{order+1}.  mu_terms[i] is mu_{i+1}, N_terms[i] is N_{i+1}.
struct TruncatedDeformation {
  NijenhuisPair base;
  std::vector<AltMap> mu_terms;
  std::vector<Matrix> N_terms;

  int order() const { return static_cast<int>(mu_terms.size()); }
};

/// phi_t = Id + t phi_1 + ... ; phi_terms[i] is phi_{i+1}.
struct TruncatedEquivalence {
  std::vector<Matrix> phi_terms;
};

/// Per-order residuals of the Jacobi convolution and the Nijenhuis
/// convolution identities.
CheckReport check_truncated(const TruncatedDeformation& def);

/// (mu_1, N_1) as a cone 2-cochain; requires order 1 validity.
ConeCochain infinitesimal_to_cocycle(const TruncatedDeformation& def);

/// (mu + t chi, N + t F) from an adjoint 2-cocycle; requires the cocycle
/// conditions to hold.
TruncatedDeformation cocycle_to_infinitesimal(const NijenhuisPair& pair, const AltMap& chi,
                                              const AltMap& F);

/// Residuals of sum phi_i mu_j = sum mu'_i(phi_j, phi_k) and
/// sum N'_i phi_j = sum phi_i N_j for each order p.
CheckReport check_equivalence(const TruncatedDeformation& a, const TruncatedDeformation& b,
                              const TruncatedEquivalence& eq);

/// Solves (mu_1 - mu'_1, N_1 - N'_1) = delta_NLie(phi_1) for order-1
/// deformations over the same base; absent when the classes differ.
std::optional<TruncatedEquivalence> equivalence_witness(const TruncatedDeformation& a,
                                                        const TruncatedDeformation& b);

}  // namespace nijlie

#endif

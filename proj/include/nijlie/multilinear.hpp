#ifndef NIJLIE_MULTILINEAR_HPP
#define NIJLIE_MULTILINEAR_HPP

#include "nijlie/alt_map.hpp"
#include "nijlie/representation.hpp"

namespace nijlie {

/// i_P Q: insert P into the first slot of Q, summed over (m, n-1)-shuffles.
/// P must take values in the source space; Q may have any target.
AltMap insertion(const AltMap& P, const AltMap& Q);

/// Nijenhuis-Richardson bracket [P,Q] = i_P Q - (-1)^{(m-1)(n-1)} i_Q P.
AltMap nr_bracket(const AltMap& P, const AltMap& Q);

/// Cup product (P v Q)(x_1..x_{m+n}) = sum over (m,n)-shuffles of
/// sign * [P(..), Q(..)]_g.
AltMap cup_product(const LieAlgebra& L, const AltMap& P, const AltMap& Q);

/// Chevalley-Eilenberg differential with coefficients in rep.
AltMap ce_differential(const Representation& rep, const AltMap& f);

/// Frolicher-Nijenhuis bracket
/// [P,Q] = P v Q + (-1)^m i_{dP} Q - (-1)^{(m+1)n} i_{dQ} P,
/// with d the adjoint CE differential.
AltMap fn_bracket(const LieAlgebra& L, const AltMap& P, const AltMap& Q);

/// Matrix of the CE differential C^n -> C^{n+1} in the flat bases.
Matrix ce_matrix(const Representation& rep, int n);

/// Per-degree kernel / image / cohomology dimensions of a cochain complex,
/// together with the differential matrices that produced them.
struct CochainComplexReport {
  struct Degree {
    int n = 0;
    int dim_cochains = 0;
    Matrix d;        // differential out of degree n
    int rank_d = 0;  // image dimension in degree n+1
    int dim_kernel = 0;
    int dim_h = 0;  // kernel minus incoming image
  };
  std::vector<Degree> degrees;

  const Degree& at(int n) const { return degrees[static_cast<std::size_t>(n)]; }
  std::vector<int> h_dims() const;
};

/// Assembles the report for d^n: C^n -> C^{n+1}, degrees 0..up_to.
CochainComplexReport complex_report(const std::function<int(int)>& dim_c,
                                    const std::function<Matrix(int)>& dmat, int up_to);

CochainComplexReport ce_cohomology(const Representation& rep, int up_to);

}  // namespace nijlie

#endif

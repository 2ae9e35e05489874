#ifndef NIJLIE_LIE_ALGEBRA_HPP
#define NIJLIE_LIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "nijlie/matrix.hpp"
#include "nijlie/report.hpp"

namespace nijlie {

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k.  Both orders (i,j) and (j,i) are
/// stored; antisymmetry is validated by check_lie, never repaired.
struct LieAlgebra {
  int dim = 0;
  std::vector<Vec> c;  // c[i*dim + j] = coordinates of [e_i, e_j]
  std::vector<std::string> labels;

  LieAlgebra() = default;
  explicit LieAlgebra(int d);

  const Vec& structure(int i, int j) const { return c[static_cast<std::size_t>(i) * dim + j]; }
  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(int i, int j, const Vec& v);
  /// Sets [e_i, e_j] = v only (for loading possibly inconsistent data).
  void set_bracket_raw(int i, int j, const Vec& v);

  Vec bracket(const Vec& x, const Vec& y) const;
  bool operator==(const LieAlgebra& o) const { return dim == o.dim && c == o.c; }
};

/// Lists every violated antisymmetry / Jacobi instance.
CheckReport check_lie(const LieAlgebra& L);

/// Transports the structure constants along the change of basis
/// e_i' = sum_k P[k][i] e_k (P invertible).
LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P, const Matrix& P_inv);

/// Kernel of all adjoint maps.
Matrix center(const LieAlgebra& L);

}  // namespace nijlie

#endif

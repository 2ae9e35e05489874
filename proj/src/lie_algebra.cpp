#include "nijlie/lie_algebra.hpp"

#include <stdexcept>

namespace nijlie {

LieAlgebra::LieAlgebra(int d) : dim(d), c(static_cast<std::size_t>(d) * d, zero_vec(d)) {}

void LieAlgebra::set_bracket(int i, int j, const Vec& v) {
  set_bracket_raw(i, j, v);
  set_bracket_raw(j, i, negate(v));
}

void LieAlgebra::set_bracket_raw(int i, int j, const Vec& v) {
  if (static_cast<int>(v.size()) != dim)
    throw std::invalid_argument("structure constant vector has wrong length");
  c[static_cast<std::size_t>(i) * dim + j] = v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw std::invalid_argument("bracket: vector length mismatch");
  Vec out = zero_vec(dim);
  for (int i = 0; i < dim; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (sgn(y[j]) == 0) continue;
      add_scaled(out, x[i] * y[j], structure(i, j));
    }
  }
  return out;
}

CheckReport check_lie(const LieAlgebra& L) {
  CheckReport rep;
  int d = L.dim;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      rep.add_nonzero("antisymmetry", {i, j}, add(L.structure(i, j), L.structure(j, i)));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        Vec r = L.bracket(L.structure(i, j), unit_vec(d, k));
        add_to(r, L.bracket(L.structure(j, k), unit_vec(d, i)));
        add_to(r, L.bracket(L.structure(k, i), unit_vec(d, j)));
        rep.add_nonzero("jacobi", {i, j, k}, r);
      }
  return rep;
}

LieAlgebra change_basis(const LieAlgebra& L, const Matrix& P, const Matrix& P_inv) {
  LieAlgebra out(L.dim);
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j) {
      Vec br = L.bracket(P.col(i), P.col(j));
      out.set_bracket_raw(i, j, P_inv.apply(br));
    }
  return out;
}

Matrix center(const LieAlgebra& L) {
  // stack all ad matrices: x central iff ad(e_i) x = 0 for all i
  Matrix stacked(L.dim * L.dim, L.dim);
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j) {
      const Vec& v = L.structure(i, j);
      for (int k = 0; k < L.dim; ++k) stacked.at(i * L.dim + k, j) = v[k];
    }
  return kernel_basis(stacked);
}

}  // namespace nijlie

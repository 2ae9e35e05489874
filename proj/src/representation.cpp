#include "nijlie/representation.hpp"

#include <stdexcept>

namespace nijlie {

Matrix Representation::action(const Vec& x) const {
  Matrix m(dimV, dimV);
  for (int i = 0; i < base.dim; ++i)
    if (sgn(x[i]) != 0) m = m + rho[i] * x[i];
  return m;
}

CheckReport check_representation(const Representation& rep) {
  CheckReport out;
  int d = rep.base.dim;
  for (int i = 0; i < d; ++i)
    if (rep.rho[i].rows != rep.dimV || rep.rho[i].cols != rep.dimV)
      throw std::invalid_argument("representation matrix has wrong shape");
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Matrix lhs = rep.action(rep.base.structure(i, j));
      Matrix rhs = rep.rho[i] * rep.rho[j] - rep.rho[j] * rep.rho[i];
      out.add_nonzero("rep-homomorphism", {i, j}, (lhs - rhs).a);
    }
  return out;
}

Representation adjoint_rep(const LieAlgebra& L) {
  Representation rep;
  rep.base = L;
  rep.dimV = L.dim;
  rep.rho.resize(static_cast<std::size_t>(L.dim));
  for (int i = 0; i < L.dim; ++i) {
    Matrix m(L.dim, L.dim);
    for (int j = 0; j < L.dim; ++j) {
      const Vec& v = L.structure(i, j);
      for (int k = 0; k < L.dim; ++k) m.at(k, j) = v[k];
    }
    rep.rho[i] = m;
  }
  return rep;
}

Representation trivial_rep(const LieAlgebra& L, int dimV) {
  Representation rep;
  rep.base = L;
  rep.dimV = dimV;
  rep.rho.assign(static_cast<std::size_t>(L.dim), Matrix(dimV, dimV));
  return rep;
}

Representation dual_rep(const Representation& rep) {
  Representation out;
  out.base = rep.base;
  out.dimV = rep.dimV;
  out.rho.resize(rep.rho.size());
  for (std::size_t i = 0; i < rep.rho.size(); ++i) out.rho[i] = -rep.rho[i].transpose();
  return out;
}

LieAlgebra semidirect(const LieAlgebra& L, const Representation& rep) {
  int d = L.dim, m = rep.dimV, n = d + m;
  LieAlgebra out(n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec v = zero_vec(n);
      const Vec& br = L.structure(i, j);
      for (int k = 0; k < d; ++k) v[k] = br[k];
      out.set_bracket_raw(i, j, v);
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < m; ++j) {
      Vec v = zero_vec(n);
      Vec act = rep.act(i, unit_vec(m, j));
      for (int k = 0; k < m; ++k) v[d + k] = act[k];
      out.set_bracket_raw(i, d + j, v);
      out.set_bracket_raw(d + j, i, negate(v));
    }
  // V x V part is zero (abelian ideal); already initialised to zero.
  return out;
}

CheckReport check_nijenhuis_rep(const LieAlgebra& L, const Matrix& N, const NijenhuisRep& nrep) {
  if (N.rows != L.dim || N.cols != L.dim)
    throw std::invalid_argument("check_nijenhuis_rep: N has wrong shape");
  if (nrep.S.rows != nrep.rep.dimV || nrep.S.cols != nrep.rep.dimV)
    throw std::invalid_argument("check_nijenhuis_rep: S has wrong shape");
  CheckReport out;
  const Representation& rep = nrep.rep;
  const Matrix& S = nrep.S;
  for (int i = 0; i < L.dim; ++i) {
    Matrix rhoN = rep.action(N.col(i));
    for (int j = 0; j < rep.dimV; ++j) {
      Vec v = unit_vec(rep.dimV, j);
      Vec lhs = rhoN.apply(S.apply(v));
      Vec inner = rhoN.apply(v);
      add_to(inner, rep.rho[i].apply(S.apply(v)));
      add_to(inner, negate(S.apply(rep.rho[i].apply(v))));
      Vec rhs = S.apply(inner);
      out.add_nonzero("nijenhuis-rep", {i, j}, sub(lhs, rhs));
    }
  }
  return out;
}

NijenhuisRep deformed_rep(const LieAlgebra& L, const Matrix& N, const NijenhuisRep& nrep, int k, int l) {
  Matrix Nl = N.pow(l);
  Matrix Sl = nrep.S.pow(l);
  Representation out;
  out.base = L;
  out.dimV = nrep.rep.dimV;
  out.rho.resize(static_cast<std::size_t>(L.dim));
  for (int i = 0; i < L.dim; ++i)
    out.rho[i] = nrep.rep.action(Nl.col(i)) + nrep.rep.rho[i] * Sl - Sl * nrep.rep.rho[i];
  return NijenhuisRep{out, nrep.S.pow(k)};
}

}  // namespace nijlie

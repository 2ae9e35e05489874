#include "nijlie/coalgebra.hpp"

#include <stdexcept>

namespace nijlie {

Tensor2 Cobracket::eval(const Vec& x) const {
  Tensor2 out(dim);
  for (int k = 0; k < dim; ++k) {
    if (sgn(x[k]) == 0) continue;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) out.at(i, j) += x[k] * delta[static_cast<std::size_t>(k)].at(i, j);
  }
  return out;
}

CheckReport check_coalgebra(const Cobracket& co) {
  CheckReport out;
  int d = co.dim;
  for (int i = 0; i < d; ++i) {
    const Tensor2& t = co.delta[static_cast<std::size_t>(i)];
    out.add_nonzero("co-antisymmetry", {i}, (t + t.flip()).flatten());
  }
  for (int x = 0; x < d; ++x) {
    // (Id + sigma + sigma^2)(Id (x) delta) delta(e_x)
    Tensor3 t(d);
    const Tensor2& dx = co.delta[static_cast<std::size_t>(x)];
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        if (sgn(dx.at(a, b)) == 0) continue;
        const Tensor2& db = co.delta[static_cast<std::size_t>(b)];
        for (int c = 0; c < d; ++c)
          for (int e = 0; e < d; ++e) t.at(a, c, e) += dx.at(a, b) * db.at(c, e);
      }
    Tensor3 r = t + t.rotate() + t.rotate().rotate();
    out.add_nonzero("co-jacobi", {x}, r.flatten());
  }
  return out;
}

LieAlgebra dualize_coalgebra(const Cobracket& co) {
  int d = co.dim;
  LieAlgebra out(d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Vec v = zero_vec(d);
      for (int k = 0; k < d; ++k) v[k] = co.delta[static_cast<std::size_t>(k)].at(a, b);
      out.set_bracket_raw(a, b, v);
    }
  return out;
}

Cobracket dualize_algebra(const LieAlgebra& L) {
  int d = L.dim;
  Cobracket co(d);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) co.delta[static_cast<std::size_t>(k)].at(i, j) = L.structure(i, j)[k];
  return co;
}

CheckReport check_coalgebra_nijenhuis(const Cobracket& co, const Matrix& S) {
  if (S.rows != co.dim || S.cols != co.dim)
    throw std::invalid_argument("check_coalgebra_nijenhuis: S has wrong shape");
  CheckReport out;
  for (int i = 0; i < co.dim; ++i) {
    Tensor2 lhs = co.delta[static_cast<std::size_t>(i)].apply_left(S).apply_right(S);
    Tensor2 dS = co.eval(S.col(i));
    Tensor2 rhs = dS.apply_left(S) + dS.apply_right(S) - co.eval(S.apply(S.col(i)));
    out.add_nonzero("coalgebra-nijenhuis", {i}, (lhs - rhs).flatten());
  }
  return out;
}

Cobracket deformed_cobracket_unchecked(const Cobracket& co, const Matrix& S) {
  Cobracket out(co.dim);
  for (int i = 0; i < co.dim; ++i) {
    const Tensor2& t = co.delta[static_cast<std::size_t>(i)];
    out.delta[static_cast<std::size_t>(i)] = t.apply_left(S) + t.apply_right(S) - co.eval(S.col(i));
  }
  return out;
}

Cobracket deformed_cobracket(const Cobracket& co, const Matrix& S) {
  if (!check_coalgebra_nijenhuis(co, S).ok())
    throw std::invalid_argument("deformed_cobracket: S is not Nijenhuis for the coalgebra");
  return deformed_cobracket_unchecked(co, S);
}

CheckReport check_admissible(const LieAlgebra& L, const Matrix& N, const Representation& rep,
                             const Matrix& S_V) {
  if (S_V.rows != rep.dimV || S_V.cols != rep.dimV)
    throw std::invalid_argument("check_admissible: S has wrong shape");
  CheckReport out;
  for (int i = 0; i < L.dim; ++i) {
    Matrix rhoN = rep.action(N.col(i));
    Matrix lhs = S_V * rhoN + rep.rho[static_cast<std::size_t>(i)] * S_V * S_V;
    Matrix rhs = rhoN * S_V + S_V * rep.rho[static_cast<std::size_t>(i)] * S_V;
    out.add_nonzero("admissible", {i}, (lhs - rhs).a);
  }
  return out;
}

}  // namespace nijlie

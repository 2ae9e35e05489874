#include "nijlie/homotopy.hpp"

#include <stdexcept>

namespace nijlie {

Vec TwoTermL::l2_mix(const Vec& x, const Vec& h) const {
  Vec out = zero_vec(dim1);
  for (int i = 0; i < dim0; ++i) {
    if (sgn(x[i]) == 0) continue;
    add_scaled(out, x[i], l2_01[static_cast<std::size_t>(i)].apply(h));
  }
  return out;
}

LieAlgebra TwoTermL::skeleton_algebra() const {
  LieAlgebra L(dim0);
  for (int i = 0; i < dim0; ++i)
    for (int j = i + 1; j < dim0; ++j) L.set_bracket(i, j, l2_00.eval_indices({i, j}));
  return L;
}

Representation TwoTermL::rep_on_l1() const {
  Representation rep;
  rep.base = skeleton_algebra();
  rep.dimV = dim1;
  rep.rho = l2_01;
  return rep;
}

Matrix TwoTermRep::m2_00_of(const Vec& x) const {
  Matrix m(dimV0, dimV0);
  for (std::size_t i = 0; i < m2_00.size(); ++i)
    if (sgn(x[i]) != 0) m = m + m2_00[i] * x[i];
  return m;
}

Matrix TwoTermRep::m2_01_of(const Vec& x) const {
  Matrix m(dimV1, dimV1);
  for (std::size_t i = 0; i < m2_01.size(); ++i)
    if (sgn(x[i]) != 0) m = m + m2_01[i] * x[i];
  return m;
}

Matrix TwoTermRep::m2_10_of(const Vec& h) const {
  Matrix m(dimV1, dimV0);
  for (std::size_t a = 0; a < m2_10.size(); ++a)
    if (sgn(h[a]) != 0) m = m + m2_10[a] * h[a];
  return m;
}

Matrix TwoTermRep::m3_of(const Vec& x, const Vec& y) const {
  int d0 = static_cast<int>(m2_00.size());
  Matrix m(dimV1, dimV0);
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j) {
      Rational coef = x[i] * y[j] - x[j] * y[i];
      if (sgn(coef) == 0) continue;
      m = m + m3[static_cast<std::size_t>(combo_rank({i, j}, d0))] * coef;
    }
  return m;
}

CheckReport check_2term(const TwoTermL& T) {
  CheckReport out;
  int d0 = T.dim0, d1 = T.dim1;
  // (1)  d l2(x, h) = l2(x, d h)
  for (int i = 0; i < d0; ++i)
    for (int a = 0; a < d1; ++a) {
      Vec lhs = T.d.apply(T.l2_01[static_cast<std::size_t>(i)].col(a));
      Vec rhs = T.l2_00.eval({unit_vec(d0, i), T.d.col(a)});
      out.add_nonzero("2term1", {i, a}, sub(lhs, rhs));
    }
  // (2)  l2(d h, k) = l2(h, d k)
  for (int a = 0; a < d1; ++a)
    for (int b = a; b < d1; ++b) {
      Vec r = T.l2_mix(T.d.col(a), unit_vec(d1, b));
      add_to(r, T.l2_mix(T.d.col(b), unit_vec(d1, a)));
      out.add_nonzero("2term2", {a, b}, r);
    }
  // (3)  d l3(x,y,z) = l2(x, l2(y,z)) + l2(y, l2(z,x)) + l2(z, l2(x,y))
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j)
      for (int k = j + 1; k < d0; ++k) {
        Vec lhs = T.d.apply(T.l3.eval_indices({i, j, k}));
        Vec rhs = T.l2_00.eval({unit_vec(d0, i), T.l2_00.eval_indices({j, k})});
        add_to(rhs, T.l2_00.eval({unit_vec(d0, j), T.l2_00.eval_indices({k, i})}));
        add_to(rhs, T.l2_00.eval({unit_vec(d0, k), T.l2_00.eval_indices({i, j})}));
        out.add_nonzero("2term3", {i, j, k}, sub(lhs, rhs));
      }
  // (4)  l3(x,y,dh) = l2(x, l2(y,h)) + l2(y, l2(h,x)) + l2(h, l2(x,y))
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j)
      for (int a = 0; a < d1; ++a) {
        Vec h = unit_vec(d1, a);
        Vec lhs = T.l3.eval({unit_vec(d0, i), unit_vec(d0, j), T.d.col(a)});
        Vec rhs = T.l2_01[static_cast<std::size_t>(i)].apply(
            T.l2_01[static_cast<std::size_t>(j)].apply(h));
        add_to(rhs, negate(T.l2_01[static_cast<std::size_t>(j)].apply(
                       T.l2_01[static_cast<std::size_t>(i)].apply(h))));
        add_to(rhs, negate(T.l2_mix(T.l2_00.eval_indices({i, j}), h)));
        out.add_nonzero("2term4", {i, j, a}, sub(lhs, rhs));
      }
  // (5)  the coherence of l3 (transcribed literally)
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j)
      for (int k = j + 1; k < d0; ++k)
        for (int l = k + 1; l < d0; ++l) {
          auto l3v = [&](int a, int b, int c) { return T.l3.eval_indices({a, b, c}); };
          auto l3vec = [&](const Vec& v, int b, int c) {
            return T.l3.eval({v, unit_vec(d0, b), unit_vec(d0, c)});
          };
          Vec r = T.l2_mix(unit_vec(d0, i), l3v(j, k, l));
          add_to(r, negate(T.l2_mix(unit_vec(d0, j), l3v(i, k, l))));
          add_to(r, T.l2_mix(unit_vec(d0, k), l3v(i, j, l)));
          add_to(r, negate(T.l2_mix(unit_vec(d0, l), l3v(i, j, k))));
          add_to(r, negate(l3vec(T.l2_00.eval_indices({i, j}), k, l)));
          add_to(r, l3vec(T.l2_00.eval_indices({i, k}), j, l));
          add_to(r, negate(l3vec(T.l2_00.eval_indices({i, l}), j, k)));
          add_to(r, negate(l3vec(T.l2_00.eval_indices({j, k}), i, l)));
          add_to(r, l3vec(T.l2_00.eval_indices({j, l}), i, k));
          add_to(r, negate(l3vec(T.l2_00.eval_indices({k, l}), i, j)));
          out.add_nonzero("2term5", {i, j, k, l}, r);
        }
  return out;
}

CheckReport check_homotopy_nijenhuis(const TwoTermL& T, const HomotopyNijenhuis& HN) {
  CheckReport out;
  int d0 = T.dim0, d1 = T.dim1;
  const Matrix& N0 = HN.N0;
  const Matrix& N1 = HN.N1;
  out.add_nonzero("hn1", {}, (T.d * N1 - N0 * T.d).a);
  // deformed bracket l2(N0 x, y) + l2(x, N0 y) - N0 l2(x, y) on L0
  auto db = [&](int i, int j) {
    Vec v = T.l2_00.eval({N0.col(i), unit_vec(d0, j)});
    add_to(v, T.l2_00.eval({unit_vec(d0, i), N0.col(j)}));
    add_to(v, negate(N0.apply(T.l2_00.eval_indices({i, j}))));
    return v;
  };
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j) {
      Vec r = N0.apply(db(i, j));
      add_to(r, negate(T.l2_00.eval({N0.col(i), N0.col(j)})));
      add_to(r, negate(T.d.apply(HN.N2.eval_indices({i, j}))));
      out.add_nonzero("hn2", {i, j}, r);
    }
  for (int i = 0; i < d0; ++i)
    for (int a = 0; a < d1; ++a) {
      Vec h = unit_vec(d1, a);
      Vec inner = T.l2_mix(N0.col(i), h);
      add_to(inner, T.l2_mix(unit_vec(d0, i), N1.col(a)));
      add_to(inner, negate(N1.apply(T.l2_mix(unit_vec(d0, i), h))));
      Vec r = N1.apply(inner);
      add_to(r, negate(T.l2_mix(N0.col(i), N1.col(a))));
      add_to(r, negate(HN.N2.eval({unit_vec(d0, i), T.d.col(a)})));
      out.add_nonzero("hn3", {i, a}, r);
    }
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j)
      for (int k = j + 1; k < d0; ++k) {
        Vec lhs = T.l2_mix(N0.col(i), HN.N2.eval_indices({j, k}));
        add_to(lhs, T.l2_mix(N0.col(j), HN.N2.eval_indices({k, i})));
        add_to(lhs, T.l2_mix(N0.col(k), HN.N2.eval_indices({i, j})));
        add_to(lhs, negate(HN.N2.eval({db(i, j), unit_vec(d0, k)})));
        add_to(lhs, negate(HN.N2.eval({db(j, k), unit_vec(d0, i)})));
        add_to(lhs, negate(HN.N2.eval({db(k, i), unit_vec(d0, j)})));
        Vec inner = T.l2_mix(unit_vec(d0, i), HN.N2.eval_indices({j, k}));
        add_to(inner, T.l2_mix(unit_vec(d0, j), HN.N2.eval_indices({k, i})));
        add_to(inner, T.l2_mix(unit_vec(d0, k), HN.N2.eval_indices({i, j})));
        add_to(inner, negate(HN.N2.eval({T.l2_00.eval_indices({i, j}), unit_vec(d0, k)})));
        add_to(inner, negate(HN.N2.eval({T.l2_00.eval_indices({j, k}), unit_vec(d0, i)})));
        add_to(inner, negate(HN.N2.eval({T.l2_00.eval_indices({k, i}), unit_vec(d0, j)})));
        add_to(lhs, negate(N1.apply(inner)));
        Vec rhs = T.l3.eval({N0.col(i), N0.col(j), N0.col(k)});
        add_to(rhs, negate(N1.apply(T.l3.eval({N0.col(i), N0.col(j), unit_vec(d0, k)}))));
        add_to(rhs, negate(N1.apply(T.l3.eval({N0.col(i), unit_vec(d0, j), N0.col(k)}))));
        add_to(rhs, negate(N1.apply(T.l3.eval({unit_vec(d0, i), N0.col(j), N0.col(k)}))));
        Matrix N1sq = N1 * N1;
        add_to(rhs, N1sq.apply(T.l3.eval({N0.col(i), unit_vec(d0, j), unit_vec(d0, k)})));
        add_to(rhs, N1sq.apply(T.l3.eval({unit_vec(d0, i), N0.col(j), unit_vec(d0, k)})));
        add_to(rhs, N1sq.apply(T.l3.eval({unit_vec(d0, i), unit_vec(d0, j), N0.col(k)})));
        add_to(rhs, negate((N1sq * N1).apply(T.l3.eval_indices({i, j, k}))));
        out.add_nonzero("hn4", {i, j, k}, sub(lhs, rhs));
      }
  return out;
}

CheckReport check_2term_rep(const TwoTermL& T, const TwoTermRep& R) {
  CheckReport out;
  int d0 = T.dim0, d1 = T.dim1, v1 = R.dimV1, v0 = R.dimV0;
  for (int i = 0; i < d0; ++i)
    for (int p = 0; p < v1; ++p) {
      Vec lhs = R.dbar.apply(R.m2_01[static_cast<std::size_t>(i)].col(p));
      Vec rhs = R.m2_00[static_cast<std::size_t>(i)].apply(R.dbar.col(p));
      out.add_nonzero("rep1", {i, p}, sub(lhs, rhs));
    }
  for (int a = 0; a < d1; ++a)
    for (int p = 0; p < v1; ++p) {
      Vec lhs = R.m2_01_of(T.d.col(a)).col(p);
      Vec rhs = R.m2_10[static_cast<std::size_t>(a)].apply(R.dbar.col(p));
      out.add_nonzero("rep2", {a, p}, sub(lhs, rhs));
    }
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j) {
      const Matrix& mi = R.m2_00[static_cast<std::size_t>(i)];
      const Matrix& mj = R.m2_00[static_cast<std::size_t>(j)];
      Matrix lhs = R.dbar * R.m3[static_cast<std::size_t>(combo_rank({i, j}, d0))];
      Matrix rhs = mi * mj - mj * mi - R.m2_00_of(T.l2_00.eval_indices({i, j}));
      out.add_nonzero("rep3", {i, j}, (lhs - rhs).a);
      const Matrix& pi = R.m2_01[static_cast<std::size_t>(i)];
      const Matrix& pj = R.m2_01[static_cast<std::size_t>(j)];
      Matrix lhs4 = R.m3[static_cast<std::size_t>(combo_rank({i, j}, d0))] * R.dbar;
      Matrix rhs4 = pi * pj - pj * pi - R.m2_01_of(T.l2_00.eval_indices({i, j}));
      out.add_nonzero("rep4", {i, j}, (lhs4 - rhs4).a);
    }
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j)
      for (int k = j + 1; k < d0; ++k)
        for (int v = 0; v < v0; ++v) {
          Vec vv = unit_vec(v0, v);
          auto m3v = [&](int a, int b) {
            return R.m3[static_cast<std::size_t>(combo_rank({a, b}, d0))].col(v);
          };
          Vec r = R.m2_01[static_cast<std::size_t>(i)].apply(m3v(j, k));
          add_to(r, negate(R.m2_01[static_cast<std::size_t>(j)].apply(m3v(i, k))));
          add_to(r, R.m2_01[static_cast<std::size_t>(k)].apply(m3v(i, j)));
          add_to(r, R.m2_10_of(T.l3.eval_indices({i, j, k})).apply(vv));
          add_to(r, negate(R.m3_of(T.l2_00.eval_indices({i, j}), unit_vec(d0, k)).apply(vv)));
          add_to(r, R.m3_of(T.l2_00.eval_indices({i, k}), unit_vec(d0, j)).apply(vv));
          add_to(r, negate(R.m3_of(unit_vec(d0, j), unit_vec(d0, k))
                               .apply(R.m2_00[static_cast<std::size_t>(i)].col(v))));
          add_to(r, negate(R.m3_of(T.l2_00.eval_indices({j, k}), unit_vec(d0, i)).apply(vv)));
          add_to(r, R.m3_of(unit_vec(d0, i), unit_vec(d0, k))
                        .apply(R.m2_00[static_cast<std::size_t>(j)].col(v)));
          add_to(r, negate(R.m3_of(unit_vec(d0, i), unit_vec(d0, j))
                               .apply(R.m2_00[static_cast<std::size_t>(k)].col(v))));
          out.add_nonzero("rep5", {i, j, k, v}, r);
        }
  return out;
}

TwoTermL semidirect_2term(const TwoTermL& T, const TwoTermRep& R) {
  int d0 = T.dim0, d1 = T.dim1, v0 = R.dimV0, v1 = R.dimV1;
  TwoTermL S;
  S.dim0 = d0 + v0;
  S.dim1 = d1 + v1;
  S.d = Matrix::direct_sum(T.d, R.dbar);
  S.l2_00 = AltMap(2, S.dim0, S.dim0);
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j) {
      Vec v = zero_vec(S.dim0);
      Vec br = T.l2_00.eval_indices({i, j});
      for (int k = 0; k < d0; ++k) v[k] = br[k];
      S.l2_00.set_coeff({i, j}, v);
    }
  for (int i = 0; i < d0; ++i)
    for (int p = 0; p < v0; ++p) {
      Vec v = zero_vec(S.dim0);
      Vec act = R.m2_00[static_cast<std::size_t>(i)].col(p);
      for (int k = 0; k < v0; ++k) v[d0 + k] = act[k];
      S.l2_00.set_coeff({i, d0 + p}, v);
    }
  S.l2_01.resize(static_cast<std::size_t>(S.dim0));
  for (int i = 0; i < d0; ++i)
    S.l2_01[static_cast<std::size_t>(i)] =
        Matrix::direct_sum(T.l2_01[static_cast<std::size_t>(i)], R.m2_01[static_cast<std::size_t>(i)]);
  for (int p = 0; p < v0; ++p) {
    // (0, u) acting on (h, q): (0, -m2(h, u))
    Matrix m(S.dim1, S.dim1);
    for (int a = 0; a < d1; ++a) {
      Vec w = R.m2_10[static_cast<std::size_t>(a)].col(p);
      for (int t = 0; t < v1; ++t) m.at(d1 + t, a) = -w[t];
    }
    S.l2_01[static_cast<std::size_t>(d0 + p)] = m;
  }
  S.l3 = AltMap(3, S.dim0, S.dim1);
  for (int i = 0; i < d0; ++i)
    for (int j = i + 1; j < d0; ++j) {
      for (int k = j + 1; k < d0; ++k) {
        Vec v = zero_vec(S.dim1);
        Vec lv = T.l3.eval_indices({i, j, k});
        for (int a = 0; a < d1; ++a) v[a] = lv[a];
        S.l3.set_coeff({i, j, k}, v);
      }
      for (int p = 0; p < v0; ++p) {
        Vec v = zero_vec(S.dim1);
        Vec mv = R.m3[static_cast<std::size_t>(combo_rank({i, j}, d0))].col(p);
        for (int t = 0; t < v1; ++t) v[d1 + t] = mv[t];
        S.l3.set_coeff({i, j, d0 + p}, v);
      }
    }
  return S;
}

CheckReport check_homotopy_rrb(const TwoTermL& T, const TwoTermRep& R, const Matrix& r0,
                               const Matrix& r1, const AltMap& r2) {
  CheckReport out;
  int v0 = R.dimV0, v1 = R.dimV1;
  out.add_nonzero("hrrb1", {}, (T.d * r1 - r0 * R.dbar).a);
  for (int i = 0; i < v0; ++i)
    for (int j = i + 1; j < v0; ++j) {
      Vec inner = R.m2_00_of(r0.col(i)).col(j);
      add_to(inner, negate(R.m2_00_of(r0.col(j)).col(i)));
      Vec r = r0.apply(inner);
      add_to(r, negate(T.l2_00.eval({r0.col(i), r0.col(j)})));
      add_to(r, negate(T.d.apply(r2.eval_indices({i, j}))));
      out.add_nonzero("hrrb2", {i, j}, r);
    }
  for (int i = 0; i < v0; ++i)
    for (int p = 0; p < v1; ++p) {
      Vec inner = R.m2_01_of(r0.col(i)).col(p);
      add_to(inner, negate(R.m2_10_of(r1.col(p)).col(i)));
      Vec r = r1.apply(inner);
      add_to(r, negate(T.l2_mix(r0.col(i), r1.col(p))));
      add_to(r, negate(r2.eval({unit_vec(v0, i), R.dbar.col(p)})));
      out.add_nonzero("hrrb3", {i, p}, r);
    }
  // one cyclic summand of the braced block in the fourth identity
  auto block = [&](int u, int v, int w) {
    Vec r = T.l2_mix(r0.col(u), r2.eval_indices({v, w}));
    Vec mixed = R.m2_00_of(r0.col(u)).col(v);
    add_to(mixed, negate(R.m2_00_of(r0.col(v)).col(u)));
    add_to(r, negate(r2.eval({mixed, unit_vec(v0, w)})));
    Vec inner = R.m2_10_of(r2.eval_indices({u, v})).col(w);
    add_to(inner, R.m3_of(r0.col(u), r0.col(v)).col(w));
    add_to(r, r1.apply(inner));
    return r;
  };
  for (int i = 0; i < v0; ++i)
    for (int j = i + 1; j < v0; ++j)
      for (int k = j + 1; k < v0; ++k) {
        Vec r = block(i, j, k);
        add_to(r, block(j, k, i));
        add_to(r, block(k, i, j));
        add_to(r, negate(T.l3.eval({r0.col(i), r0.col(j), r0.col(k)})));
        out.add_nonzero("hrrb4", {i, j, k}, r);
      }
  return out;
}

HomotopyLift lift_homotopy_rrb(const TwoTermL& T, const TwoTermRep& R, const Matrix& r0,
                               const Matrix& r1, const AltMap& r2) {
  int d0 = T.dim0, d1 = T.dim1, v0 = R.dimV0, v1 = R.dimV1;
  HomotopyLift out;
  out.semidirect = semidirect_2term(T, R);
  Matrix R0(d0 + v0, d0 + v0), R1(d1 + v1, d1 + v1);
  for (int i = 0; i < d0; ++i)
    for (int j = 0; j < v0; ++j) R0.at(i, d0 + j) = r0.at(i, j);
  for (int a = 0; a < d1; ++a)
    for (int p = 0; p < v1; ++p) R1.at(a, d1 + p) = r1.at(a, p);
  AltMap R2(2, d0 + v0, d1 + v1);
  for (int i = 0; i < v0; ++i)
    for (int j = i + 1; j < v0; ++j) {
      Vec val = r2.eval_indices({i, j});
      Vec big = zero_vec(d1 + v1);
      for (int a = 0; a < d1; ++a) big[a] = val[a];
      R2.set_coeff({d0 + i, d0 + j}, big);
    }
  out.lifted = HomotopyNijenhuis{R0, R1, R2};
  return out;
}

SkeletalData skeletal_to_cocycle(const TwoTermL& T, const HomotopyNijenhuis& HN) {
  if (!T.d.is_zero()) throw std::invalid_argument("skeletal_to_cocycle: d must vanish");
  if (!check_2term(T).ok() || !check_homotopy_nijenhuis(T, HN).ok())
    throw std::invalid_argument("skeletal_to_cocycle: invalid skeletal data");
  SkeletalData out;
  out.pair = NijenhuisPair{T.skeleton_algebra(), HN.N0};
  out.nrep = NijenhuisRep{T.rep_on_l1(), HN.N1};
  out.chi = T.l3;
  out.F = HN.N2;
  return out;
}

std::pair<TwoTermL, HomotopyNijenhuis> cocycle_to_skeletal(const NijenhuisPair& pair,
                                                           const NijenhuisRep& nrep,
                                                           const AltMap& chi, const AltMap& F) {
  ConeCochain c{chi, F};
  if (!nlie_differential(pair, nrep, c).is_zero())
    throw std::invalid_argument("cocycle_to_skeletal: (chi, F) is not a 3-cocycle");
  TwoTermL T;
  T.dim0 = pair.L.dim;
  T.dim1 = nrep.rep.dimV;
  T.d = Matrix(pair.L.dim, nrep.rep.dimV);
  T.l2_00 = AltMap(2, T.dim0, T.dim0);
  for (int i = 0; i < T.dim0; ++i)
    for (int j = i + 1; j < T.dim0; ++j) T.l2_00.set_coeff({i, j}, pair.L.structure(i, j));
  T.l2_01 = nrep.rep.rho;
  T.l3 = chi;
  return {T, HomotopyNijenhuis{pair.N, nrep.S, F}};
}

CheckReport check_crossed_module(const CrossedModuleNLie& cm, bool check_operators) {
  CheckReport out;
  const LieAlgebra& g = cm.g.L;
  const LieAlgebra& h = cm.h.L;
  int dg = g.dim, dh = h.dim;
  out.merge(check_lie(g), "g");
  out.merge(check_lie(h), "h");
  auto rho_of = [&](const Vec& x) {
    Matrix m(dh, dh);
    for (int i = 0; i < dg; ++i)
      if (sgn(x[i]) != 0) m = m + cm.rho[static_cast<std::size_t>(i)] * x[i];
    return m;
  };
  for (int a = 0; a < dh; ++a)
    for (int b = a + 1; b < dh; ++b)
      out.add_nonzero("t-homomorphism", {a, b},
                      sub(cm.t.apply(h.structure(a, b)), g.bracket(cm.t.col(a), cm.t.col(b))));
  for (int i = 0; i < dg; ++i)
    for (int j = i + 1; j < dg; ++j) {
      Matrix lhs = rho_of(g.structure(i, j));
      Matrix rhs = cm.rho[static_cast<std::size_t>(i)] * cm.rho[static_cast<std::size_t>(j)] -
                   cm.rho[static_cast<std::size_t>(j)] * cm.rho[static_cast<std::size_t>(i)];
      out.add_nonzero("rho-rep", {i, j}, (lhs - rhs).a);
    }
  for (int i = 0; i < dg; ++i)
    for (int a = 0; a < dh; ++a)
      for (int b = a + 1; b < dh; ++b) {
        Vec lhs = cm.rho[static_cast<std::size_t>(i)].apply(h.structure(a, b));
        Vec rhs = h.bracket(cm.rho[static_cast<std::size_t>(i)].col(a), unit_vec(dh, b));
        add_to(rhs, h.bracket(unit_vec(dh, a), cm.rho[static_cast<std::size_t>(i)].col(b)));
        out.add_nonzero("rho-derivation", {i, a, b}, sub(lhs, rhs));
      }
  for (int i = 0; i < dg; ++i)
    for (int a = 0; a < dh; ++a)
      out.add_nonzero("equivariance", {i, a},
                      sub(cm.t.apply(cm.rho[static_cast<std::size_t>(i)].col(a)),
                          g.bracket(unit_vec(dg, i), cm.t.col(a))));
  for (int a = 0; a < dh; ++a)
    for (int b = 0; b < dh; ++b)
      out.add_nonzero("peiffer", {a, b},
                      sub(rho_of(cm.t.col(a)).col(b), h.structure(a, b)));
  if (check_operators) {
    out.merge(check_nijenhuis(g, cm.g.N), "g");
    out.merge(check_nijenhuis(h, cm.h.N), "h");
    out.add_nonzero("t-intertwine", {}, (cm.t * cm.h.N - cm.g.N * cm.t).a);
    out.merge(check_nijenhuis_rep(g, cm.g.N, NijenhuisRep{Representation{g, dh, cm.rho}, cm.h.N}),
              "rep");
  }
  return out;
}

CrossedModuleNLie strict_to_crossed(const TwoTermL& T, const HomotopyNijenhuis& HN) {
  if (!T.l3.is_zero() || !HN.N2.is_zero())
    throw std::invalid_argument("strict_to_crossed: data is not strict");
  if (!check_2term(T).ok() || !check_homotopy_nijenhuis(T, HN).ok())
    throw std::invalid_argument("strict_to_crossed: invalid strict data");
  CrossedModuleNLie cm;
  cm.g = NijenhuisPair{T.skeleton_algebra(), HN.N0};
  LieAlgebra h(T.dim1);
  for (int a = 0; a < T.dim1; ++a)
    for (int b = 0; b < T.dim1; ++b)
      h.set_bracket_raw(a, b, T.l2_mix(T.d.col(a), unit_vec(T.dim1, b)));
  cm.h = NijenhuisPair{h, HN.N1};
  cm.t = T.d;
  cm.rho = T.l2_01;
  return cm;
}

std::pair<TwoTermL, HomotopyNijenhuis> crossed_to_strict(const CrossedModuleNLie& cm) {
  if (!check_crossed_module(cm).ok())
    throw std::invalid_argument("crossed_to_strict: invalid crossed module");
  TwoTermL T;
  T.dim0 = cm.g.L.dim;
  T.dim1 = cm.h.L.dim;
  T.d = cm.t;
  T.l2_00 = AltMap(2, T.dim0, T.dim0);
  for (int i = 0; i < T.dim0; ++i)
    for (int j = i + 1; j < T.dim0; ++j) T.l2_00.set_coeff({i, j}, cm.g.L.structure(i, j));
  T.l2_01 = cm.rho;
  T.l3 = AltMap(3, T.dim0, T.dim1);
  return {T, HomotopyNijenhuis{cm.g.N, cm.h.N, AltMap(2, T.dim0, T.dim1)}};
}

}  // namespace nijlie

#include "nijlie/nslie.hpp"

#include <stdexcept>

namespace nijlie {

Vec NSLie::dia(const Vec& x, const Vec& y) const {
  Vec out = zero_vec(dim);
  for (int i = 0; i < dim; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (sgn(y[j]) == 0) continue;
      add_scaled(out, x[i] * y[j], dia(i, j));
    }
  }
  return out;
}

Vec NSLie::dbl(const Vec& x, const Vec& y) const {
  Vec out = dia(x, y);
  add_to(out, negate(dia(y, x)));
  add_to(out, flo(x, y));
  return out;
}

CheckReport check_nslie(const NSLie& P) {
  CheckReport out;
  int d = P.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec x = unit_vec(d, i), y = unit_vec(d, j), z = unit_vec(d, k);
        // (NSL1) (x◇y)◇z - x◇(y◇z) + ⌊x,y⌋◇z = (y◇x)◇z - y◇(x◇z)
        Vec r = P.dia(P.dia(i, j), z);
        add_to(r, negate(P.dia(x, P.dia(j, k))));
        add_to(r, P.dia(P.floor.eval_indices({i, j}), z));
        add_to(r, negate(P.dia(P.dia(j, i), z)));
        add_to(r, P.dia(y, P.dia(i, k)));
        out.add_nonzero("NSL1", {i, j, k}, r);
        // (NSL2) ⌊x,[[y,z]]⌋ + c.p. + x◇⌊y,z⌋ + c.p. = 0
        Vec s = P.flo(x, P.dbl(y, z));
        add_to(s, P.flo(y, P.dbl(z, x)));
        add_to(s, P.flo(z, P.dbl(x, y)));
        add_to(s, P.dia(x, P.flo(y, z)));
        add_to(s, P.dia(y, P.flo(z, x)));
        add_to(s, P.dia(z, P.flo(x, y)));
        out.add_nonzero("NSL2", {i, j, k}, s);
      }
  return out;
}

NSLie induce_from_nijenhuis(const NijenhuisPair& pair) {
  if (!check_nijenhuis(pair.L, pair.N).ok())
    throw std::invalid_argument("induce_from_nijenhuis: invalid Nijenhuis pair");
  int d = pair.L.dim;
  NSLie P(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) P.set_dia(i, j, pair.L.bracket(pair.N.col(i), unit_vec(d, j)));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      P.floor.set_coeff({i, j}, negate(pair.N.apply(pair.L.structure(i, j))));
  return P;
}

LieAlgebra subadjacent(const NSLie& P) {
  LieAlgebra L(P.dim);
  for (int i = 0; i < P.dim; ++i)
    for (int j = 0; j < P.dim; ++j)
      L.set_bracket_raw(i, j, P.dbl(unit_vec(P.dim, i), unit_vec(P.dim, j)));
  return L;
}

Matrix NSRep::l_of(const Vec& x) const {
  Matrix m(dimV, dimV);
  for (std::size_t i = 0; i < l.size(); ++i)
    if (sgn(x[i]) != 0) m = m + l[i] * x[i];
  return m;
}

Matrix NSRep::r_of(const Vec& x) const {
  Matrix m(dimV, dimV);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (sgn(x[i]) != 0) m = m + r[i] * x[i];
  return m;
}

Matrix NSRep::psi_of(const Vec& x) const {
  Matrix m(dimV, dimV);
  for (std::size_t i = 0; i < psi.size(); ++i)
    if (sgn(x[i]) != 0) m = m + psi[i] * x[i];
  return m;
}

CheckReport check_nsrep(const NSLie& P, const NSRep& R) {
  CheckReport out;
  int d = P.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec x = unit_vec(d, i), y = unit_vec(d, j);
      const Matrix &lx = R.l[static_cast<std::size_t>(i)], &ly = R.l[static_cast<std::size_t>(j)];
      const Matrix &rx = R.r[static_cast<std::size_t>(i)], &ry = R.r[static_cast<std::size_t>(j)];
      const Matrix &px = R.psi[static_cast<std::size_t>(i)],
                   &py = R.psi[static_cast<std::size_t>(j)];
      Matrix t1 = R.l_of(P.dia(i, j)) - lx * ly + R.l_of(P.floor.eval_indices({i, j})) -
                  R.l_of(P.dia(j, i)) + ly * lx;
      out.add_nonzero("ns-rep1", {i, j}, t1.a);
      Matrix t2 = R.r_of(P.dia(i, j)) - ry * rx + ry * px - lx * ry + ry * lx;
      out.add_nonzero("ns-rep2", {i, j}, t2.a);
      Matrix t3 = R.psi_of(P.dbl(x, y)) - R.r_of(P.floor.eval_indices({i, j})) - lx * py +
                  ly * px - px * (ly - ry + py) + py * (lx - rx + px);
      out.add_nonzero("ns-rep3", {i, j}, t3.a);
    }
  return out;
}

NSRep adjoint_nsrep(const NSLie& P) {
  int d = P.dim;
  NSRep R;
  R.dimV = d;
  R.l.resize(static_cast<std::size_t>(d));
  R.r.resize(static_cast<std::size_t>(d));
  R.psi.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    Matrix li(d, d), ri(d, d), pi(d, d);
    for (int j = 0; j < d; ++j) {
      Vec lv = P.dia(i, j), rv = P.dia(j, i), pv = P.floor.eval_indices({i, j});
      for (int k = 0; k < d; ++k) {
        li.at(k, j) = lv[k];
        ri.at(k, j) = rv[k];
        pi.at(k, j) = pv[k];
      }
    }
    R.l[static_cast<std::size_t>(i)] = li;
    R.r[static_cast<std::size_t>(i)] = ri;
    R.psi[static_cast<std::size_t>(i)] = pi;
  }
  return R;
}

NSRep rep_from_nijenhuis_rep(const NijenhuisPair& pair, const NijenhuisRep& nrep) {
  int d = pair.L.dim;
  NSRep R;
  R.dimV = nrep.rep.dimV;
  R.l.resize(static_cast<std::size_t>(d));
  R.r.resize(static_cast<std::size_t>(d));
  R.psi.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    R.l[static_cast<std::size_t>(i)] = nrep.rep.action(pair.N.col(i));
    R.r[static_cast<std::size_t>(i)] = -(nrep.rep.rho[static_cast<std::size_t>(i)] * nrep.S);
    R.psi[static_cast<std::size_t>(i)] = -(nrep.S * nrep.rep.rho[static_cast<std::size_t>(i)]);
  }
  return R;
}

NSLie semidirect_nslie(const NSLie& P, const NSRep& R) {
  int d = P.dim, m = R.dimV, n = d + m;
  NSLie out(n);
  auto emb_p = [&](const Vec& v) {
    Vec w = zero_vec(n);
    for (int i = 0; i < d; ++i) w[i] = v[i];
    return w;
  };
  auto emb_v = [&](const Vec& v) {
    Vec w = zero_vec(n);
    for (int i = 0; i < m; ++i) w[d + i] = v[i];
    return w;
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out.set_dia(i, j, emb_p(P.dia(i, j)));
  for (int i = 0; i < d; ++i)
    for (int b = 0; b < m; ++b)
      out.set_dia(i, d + b, emb_v(R.l[static_cast<std::size_t>(i)].col(b)));
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < d; ++j)
      out.set_dia(d + a, j, emb_v(R.r[static_cast<std::size_t>(j)].col(a)));
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j)
      out.floor.set_coeff({i, j}, emb_p(P.floor.eval_indices({i, j})));
    for (int a = 0; a < m; ++a)
      out.floor.set_coeff({i, d + a}, emb_v(R.psi[static_cast<std::size_t>(i)].col(a)));
  }
  return out;
}

CheckReport check_matched_pair_nslie(const NSMatchedPair& mp) {
  CheckReport out;
  out.merge(check_nslie(mp.p1), "p1");
  out.merge(check_nslie(mp.p2), "p2");
  out.merge(check_nsrep(mp.p1, NSRep{mp.p2.dim, mp.l, mp.r, mp.psi}), "p1-on-p2");
  out.merge(check_nsrep(mp.p2, NSRep{mp.p1.dim, mp.L, mp.R, mp.Psi}), "p2-on-p1");
  int d1 = mp.p1.dim, d2 = mp.p2.dim;
  NSRep low{d2, mp.l, mp.r, mp.psi};
  NSRep up{d1, mp.L, mp.R, mp.Psi};
  auto sigma_low = [&](int i) {  // (l_x - r_x + psi_x) for x = e_i
    return mp.l[static_cast<std::size_t>(i)] - mp.r[static_cast<std::size_t>(i)] +
           mp.psi[static_cast<std::size_t>(i)];
  };
  auto sigma_up = [&](int a) {  // (L_a - R_a + Psi_a)
    return mp.L[static_cast<std::size_t>(a)] - mp.R[static_cast<std::size_t>(a)] +
           mp.Psi[static_cast<std::size_t>(a)];
  };
  for (int i = 0; i < d1; ++i)
    for (int a = 0; a < d2; ++a)
      for (int b = 0; b < d2; ++b) {
        Vec al = unit_vec(d2, a), be = unit_vec(d2, b);
        const Matrix& lx = mp.l[static_cast<std::size_t>(i)];
        const Matrix& rx = mp.r[static_cast<std::size_t>(i)];
        const Matrix& px = mp.psi[static_cast<std::size_t>(i)];
        // mnsl1
        Vec t = lx.apply(mp.p2.dia(a, b));
        add_to(t, negate(mp.p2.dia(lx.col(a), be)));
        add_to(t, negate(mp.p2.dia(al, lx.col(b))));
        add_to(t, negate(mp.p2.dia(px.col(a), be)));
        add_to(t, mp.p2.dia(rx.col(a), be));
        add_to(t, negate(low.r_of(mp.R[static_cast<std::size_t>(b)].col(i)).apply(al)));
        add_to(t, low.l_of(sigma_up(a).col(i)).apply(be));
        out.add_nonzero("mnsl1", {i, a, b}, t);
        // mnsl2
        Vec u = rx.apply(mp.p2.dbl(al, be));
        add_to(u, negate(mp.p2.dia(al, rx.col(b))));
        add_to(u, mp.p2.dia(be, rx.col(a)));
        add_to(u, negate(low.r_of(mp.L[static_cast<std::size_t>(b)].col(i)).apply(al)));
        add_to(u, low.r_of(mp.L[static_cast<std::size_t>(a)].col(i)).apply(be));
        out.add_nonzero("mnsl2", {i, a, b}, u);
        // mnsl5
        Vec w = lx.apply(mp.p2.flo(al, be));
        add_to(w, negate(mp.p2.flo(sigma_low(i).col(a), be)));
        add_to(w, negate(mp.p2.flo(al, sigma_low(i).col(b))));
        add_to(w, negate(low.psi_of(sigma_up(b).col(i)).apply(al)));
        add_to(w, low.psi_of(sigma_up(a).col(i)).apply(be));
        add_to(w, negate(mp.p2.dia(al, px.col(b))));
        add_to(w, mp.p2.dia(be, px.col(a)));
        add_to(w, negate(low.r_of(mp.Psi[static_cast<std::size_t>(a)].col(i)).apply(be)));
        add_to(w, low.r_of(mp.Psi[static_cast<std::size_t>(b)].col(i)).apply(al));
        add_to(w, px.apply(mp.p2.dbl(al, be)));
        out.add_nonzero("mnsl5", {i, a, b}, w);
      }
  for (int a = 0; a < d2; ++a)
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d1; ++j) {
        Vec x = unit_vec(d1, i), y = unit_vec(d1, j);
        const Matrix& La = mp.L[static_cast<std::size_t>(a)];
        const Matrix& Ra = mp.R[static_cast<std::size_t>(a)];
        const Matrix& Pa = mp.Psi[static_cast<std::size_t>(a)];
        // mnsl3
        Vec t = La.apply(mp.p1.dia(i, j));
        add_to(t, negate(mp.p1.dia(La.col(i), y)));
        add_to(t, negate(mp.p1.dia(x, La.col(j))));
        add_to(t, negate(mp.p1.dia(Pa.col(i), y)));
        add_to(t, mp.p1.dia(Ra.col(i), y));
        add_to(t, negate(up.r_of(mp.r[static_cast<std::size_t>(j)].col(a)).apply(x)));
        add_to(t, up.l_of(sigma_low(i).col(a)).apply(y));
        out.add_nonzero("mnsl3", {a, i, j}, t);
        // mnsl4
        Vec u = Ra.apply(mp.p1.dbl(x, y));
        add_to(u, negate(mp.p1.dia(x, Ra.col(j))));
        add_to(u, mp.p1.dia(y, Ra.col(i)));
        add_to(u, negate(up.r_of(mp.l[static_cast<std::size_t>(j)].col(a)).apply(x)));
        add_to(u, up.r_of(mp.l[static_cast<std::size_t>(i)].col(a)).apply(y));
        out.add_nonzero("mnsl4", {a, i, j}, u);
        // mnsl6
        Vec w = La.apply(mp.p1.flo(x, y));
        add_to(w, negate(mp.p1.flo(sigma_up(a).col(i), y)));
        add_to(w, negate(mp.p1.flo(x, sigma_up(a).col(j))));
        add_to(w, negate(up.psi_of(sigma_low(j).col(a)).apply(x)));
        add_to(w, up.psi_of(sigma_low(i).col(a)).apply(y));
        add_to(w, negate(mp.p1.dia(x, Pa.col(j))));
        add_to(w, mp.p1.dia(y, Pa.col(i)));
        add_to(w, negate(up.r_of(mp.psi[static_cast<std::size_t>(i)].col(a)).apply(y)));
        add_to(w, up.r_of(mp.psi[static_cast<std::size_t>(j)].col(a)).apply(x));
        add_to(w, Pa.apply(mp.p1.dbl(x, y)));
        out.add_nonzero("mnsl6", {a, i, j}, w);
      }
  return out;
}

NSLie bicrossed_nslie_unchecked(const NSMatchedPair& mp) {
  int d1 = mp.p1.dim, d2 = mp.p2.dim, n = d1 + d2;
  NSLie out(n);
  auto emb1 = [&](const Vec& v) {
    Vec w = zero_vec(n);
    for (int i = 0; i < d1; ++i) w[i] = v[i];
    return w;
  };
  auto emb2 = [&](const Vec& v) {
    Vec w = zero_vec(n);
    for (int a = 0; a < d2; ++a) w[d1 + a] = v[a];
    return w;
  };
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j) out.set_dia(i, j, emb1(mp.p1.dia(i, j)));
  for (int a = 0; a < d2; ++a)
    for (int b = 0; b < d2; ++b) out.set_dia(d1 + a, d1 + b, emb2(mp.p2.dia(a, b)));
  for (int i = 0; i < d1; ++i)
    for (int b = 0; b < d2; ++b) {
      // (e_i, 0) ◇ (0, f_b) = (R_b e_i, l_i f_b)
      out.set_dia(i, d1 + b, add(emb1(mp.R[static_cast<std::size_t>(b)].col(i)),
                                 emb2(mp.l[static_cast<std::size_t>(i)].col(b))));
      // (0, f_b) ◇ (e_i, 0) = (L_b e_i, r_i f_b)
      out.set_dia(d1 + b, i, add(emb1(mp.L[static_cast<std::size_t>(b)].col(i)),
                                 emb2(mp.r[static_cast<std::size_t>(i)].col(b))));
    }
  for (int i = 0; i < d1; ++i) {
    for (int j = i + 1; j < d1; ++j)
      out.floor.set_coeff({i, j}, emb1(mp.p1.floor.eval_indices({i, j})));
    for (int a = 0; a < d2; ++a)
      // ⌊(e_i, 0), (0, f_a)⌋ = (-Psi_a e_i, psi_i f_a)
      out.floor.set_coeff({i, d1 + a},
                          add(emb1(negate(mp.Psi[static_cast<std::size_t>(a)].col(i))),
                              emb2(mp.psi[static_cast<std::size_t>(i)].col(a))));
  }
  for (int a = 0; a < d2; ++a)
    for (int b = a + 1; b < d2; ++b)
      out.floor.set_coeff({d1 + a, d1 + b}, emb2(mp.p2.floor.eval_indices({a, b})));
  return out;
}

NSLie bicrossed_nslie(const NSMatchedPair& mp) {
  if (!check_matched_pair_nslie(mp).ok())
    throw std::invalid_argument("bicrossed_nslie: not a matched pair of NS-Lie algebras");
  return bicrossed_nslie_unchecked(mp);
}

NSMatchedPair matched_pair_from_nijenhuis(const MatchedPairData& nmp) {
  if (!nmp.N || !nmp.S)
    throw std::invalid_argument("matched_pair_from_nijenhuis: operators are required");
  if (!check_matched_pair(nmp).ok())
    throw std::invalid_argument("matched_pair_from_nijenhuis: not a Nijenhuis matched pair");
  const Matrix& N = *nmp.N;
  const Matrix& S = *nmp.S;
  NSMatchedPair out;
  out.p1 = induce_from_nijenhuis(NijenhuisPair{nmp.g, N});
  out.p2 = induce_from_nijenhuis(NijenhuisPair{nmp.h, S});
  int d1 = nmp.g.dim, d2 = nmp.h.dim;
  out.l.resize(static_cast<std::size_t>(d1));
  out.r.resize(static_cast<std::size_t>(d1));
  out.psi.resize(static_cast<std::size_t>(d1));
  for (int i = 0; i < d1; ++i) {
    out.l[static_cast<std::size_t>(i)] = nmp.rho_of(N.col(i));
    out.r[static_cast<std::size_t>(i)] = -(nmp.rho[static_cast<std::size_t>(i)] * S);
    out.psi[static_cast<std::size_t>(i)] = -(S * nmp.rho[static_cast<std::size_t>(i)]);
  }
  out.L.resize(static_cast<std::size_t>(d2));
  out.R.resize(static_cast<std::size_t>(d2));
  out.Psi.resize(static_cast<std::size_t>(d2));
  for (int a = 0; a < d2; ++a) {
    out.L[static_cast<std::size_t>(a)] = nmp.nu_of(S.col(a));
    out.R[static_cast<std::size_t>(a)] = -(nmp.nu[static_cast<std::size_t>(a)] * N);
    out.Psi[static_cast<std::size_t>(a)] = -(N * nmp.nu[static_cast<std::size_t>(a)]);
  }
  return out;
}

}  // namespace nijlie

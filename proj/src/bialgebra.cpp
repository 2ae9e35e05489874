#include "nijlie/bialgebra.hpp"

#include <stdexcept>

namespace nijlie {

Matrix MatchedPairData::rho_of(const Vec& x) const {
  Matrix m(h.dim, h.dim);
  for (int i = 0; i < g.dim; ++i)
    if (sgn(x[i]) != 0) m = m + rho[static_cast<std::size_t>(i)] * x[i];
  return m;
}

Matrix MatchedPairData::nu_of(const Vec& hvec) const {
  Matrix m(g.dim, g.dim);
  for (int a = 0; a < h.dim; ++a)
    if (sgn(hvec[a]) != 0) m = m + nu[static_cast<std::size_t>(a)] * hvec[a];
  return m;
}

CheckReport check_matched_pair(const MatchedPairData& mp) {
  const LieAlgebra& g = mp.g;
  const LieAlgebra& h = mp.h;
  int dg = g.dim, dh = h.dim;
  CheckReport out;
  out.merge(check_lie(g), "g");
  out.merge(check_lie(h), "h");
  for (int i = 0; i < dg; ++i)
    for (int j = i + 1; j < dg; ++j) {
      Matrix lhs = mp.rho_of(g.structure(i, j));
      Matrix rhs = mp.rho[static_cast<std::size_t>(i)] * mp.rho[static_cast<std::size_t>(j)] -
                   mp.rho[static_cast<std::size_t>(j)] * mp.rho[static_cast<std::size_t>(i)];
      out.add_nonzero("rho-rep", {i, j}, (lhs - rhs).a);
    }
  for (int a = 0; a < dh; ++a)
    for (int b = a + 1; b < dh; ++b) {
      Matrix lhs = mp.nu_of(h.structure(a, b));
      Matrix rhs = mp.nu[static_cast<std::size_t>(a)] * mp.nu[static_cast<std::size_t>(b)] -
                   mp.nu[static_cast<std::size_t>(b)] * mp.nu[static_cast<std::size_t>(a)];
      out.add_nonzero("nu-rep", {a, b}, (lhs - rhs).a);
    }
  // rho_x [h,k]_h = [rho_x h, k]_h + [h, rho_x k]_h + rho_{nu_k x} h - rho_{nu_h x} k
  for (int i = 0; i < dg; ++i)
    for (int a = 0; a < dh; ++a)
      for (int b = a + 1; b < dh; ++b) {
        Vec ha = unit_vec(dh, a), hb = unit_vec(dh, b);
        Vec r = mp.rho[static_cast<std::size_t>(i)].apply(h.structure(a, b));
        add_to(r, negate(h.bracket(mp.rho[static_cast<std::size_t>(i)].apply(ha), hb)));
        add_to(r, negate(h.bracket(ha, mp.rho[static_cast<std::size_t>(i)].apply(hb))));
        add_to(r, negate(mp.rho_of(mp.nu[static_cast<std::size_t>(b)].col(i)).apply(ha)));
        add_to(r, mp.rho_of(mp.nu[static_cast<std::size_t>(a)].col(i)).apply(hb));
        out.add_nonzero("compat-rho", {i, a, b}, r);
      }
  // nu_h [x,y]_g = [nu_h x, y]_g + [x, nu_h y]_g + nu_{rho_y h} x - nu_{rho_x h} y
  for (int a = 0; a < dh; ++a)
    for (int i = 0; i < dg; ++i)
      for (int j = i + 1; j < dg; ++j) {
        Vec x = unit_vec(dg, i), y = unit_vec(dg, j);
        Vec r = mp.nu[static_cast<std::size_t>(a)].apply(g.structure(i, j));
        add_to(r, negate(g.bracket(mp.nu[static_cast<std::size_t>(a)].col(i), y)));
        add_to(r, negate(g.bracket(x, mp.nu[static_cast<std::size_t>(a)].col(j))));
        add_to(r, negate(mp.nu_of(mp.rho[static_cast<std::size_t>(j)].col(a)).apply(x)));
        add_to(r, mp.nu_of(mp.rho[static_cast<std::size_t>(i)].col(a)).apply(y));
        out.add_nonzero("compat-nu", {a, i, j}, r);
      }
  if (mp.N && mp.S) {
    const Matrix& N = *mp.N;
    const Matrix& S = *mp.S;
    out.merge(check_nijenhuis(g, N), "g");
    out.merge(check_nijenhuis(h, S), "h");
    // (h, rho, S) Nijenhuis representation of (g, N)
    for (int i = 0; i < dg; ++i) {
      Matrix rhoN = mp.rho_of(N.col(i));
      Matrix lhs = rhoN * S;
      Matrix rhs = S * (rhoN + mp.rho[static_cast<std::size_t>(i)] * S -
                        S * mp.rho[static_cast<std::size_t>(i)]);
      out.add_nonzero("nijenhuis-rep-rho", {i}, (lhs - rhs).a);
    }
    // (g, nu, N) Nijenhuis representation of (h, S)
    for (int a = 0; a < dh; ++a) {
      Matrix nuS = mp.nu_of(S.col(a));
      Matrix lhs = nuS * N;
      Matrix rhs = N * (nuS + mp.nu[static_cast<std::size_t>(a)] * N -
                        N * mp.nu[static_cast<std::size_t>(a)]);
      out.add_nonzero("nijenhuis-rep-nu", {a}, (lhs - rhs).a);
    }
  }
  return out;
}

BicrossedResult bicrossed_unchecked(const MatchedPairData& mp) {
  int dg = mp.g.dim, dh = mp.h.dim, n = dg + dh;
  LieAlgebra big(n);
  auto emb_g = [&](const Vec& v) {
    Vec w = zero_vec(n);
    for (int i = 0; i < dg; ++i) w[i] = v[i];
    return w;
  };
  auto emb_h = [&](const Vec& v) {
    Vec w = zero_vec(n);
    for (int a = 0; a < dh; ++a) w[dg + a] = v[a];
    return w;
  };
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j < dg; ++j) big.set_bracket_raw(i, j, emb_g(mp.g.structure(i, j)));
  for (int a = 0; a < dh; ++a)
    for (int b = 0; b < dh; ++b)
      big.set_bracket_raw(dg + a, dg + b, emb_h(mp.h.structure(a, b)));
  for (int i = 0; i < dg; ++i)
    for (int a = 0; a < dh; ++a) {
      // [(e_i, 0), (0, f_a)] = (-nu_a e_i, rho_i f_a)
      Vec v = sub(emb_h(mp.rho[static_cast<std::size_t>(i)].col(a)),
                  emb_g(mp.nu[static_cast<std::size_t>(a)].col(i)));
      big.set_bracket_raw(i, dg + a, v);
      big.set_bracket_raw(dg + a, i, negate(v));
    }
  BicrossedResult out;
  out.algebra = std::move(big);
  if (mp.N && mp.S) out.op = Matrix::direct_sum(*mp.N, *mp.S);
  return out;
}

BicrossedResult bicrossed(const MatchedPairData& mp) {
  if (!check_matched_pair(mp).ok())
    throw std::invalid_argument("bicrossed: not a matched pair");
  return bicrossed_unchecked(mp);
}

CheckReport check_manin_triple(const NijenhuisPair& big, const NijenhuisPair& g_part,
                               const NijenhuisPair& gstar_part) {
  int d = g_part.L.dim;
  if (gstar_part.L.dim != d || big.L.dim != 2 * d)
    throw std::invalid_argument("check_manin_triple: dimension mismatch");
  CheckReport out;
  out.merge(check_lie(big.L), "big");
  out.merge(check_nijenhuis(big.L, big.N), "big");
  // g and g* closed, with the induced structures
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Vec& v = big.L.structure(i, j);
      Vec tail(v.begin() + d, v.end());
      out.add_nonzero("g-closed", {i, j}, tail);
      Vec head(v.begin(), v.begin() + d);
      out.add_nonzero("g-induced", {i, j}, sub(head, g_part.L.structure(i, j)));
      const Vec& w = big.L.structure(d + i, d + j);
      Vec whead(w.begin(), w.begin() + d);
      out.add_nonzero("gstar-closed", {i, j}, whead);
      Vec wtail(w.begin() + d, w.end());
      out.add_nonzero("gstar-induced", {i, j}, sub(wtail, gstar_part.L.structure(i, j)));
    }
  // operator restricts to N on g and to S* on g*
  for (int j = 0; j < d; ++j) {
    Vec cg = big.N.col(j);
    Vec head(cg.begin(), cg.begin() + d), tail(cg.begin() + d, cg.end());
    out.add_nonzero("op-g-restriction", {j}, sub(head, g_part.N.col(j)));
    out.add_nonzero("op-g-leak", {j}, tail);
    Vec cs = big.N.col(d + j);
    Vec shead(cs.begin(), cs.begin() + d), stail(cs.begin() + d, cs.end());
    out.add_nonzero("op-gstar-restriction", {j}, sub(stail, gstar_part.N.col(j)));
    out.add_nonzero("op-gstar-leak", {j}, shead);
  }
  // ad-invariance of B((x,a),(y,b)) = a(y) + b(x):
  // B([z,a],b) + B(a,[z,b]) = 0 for all basis z, a, b
  Matrix B(2 * d, 2 * d);
  for (int i = 0; i < d; ++i) {
    B.at(i, d + i) = 1;
    B.at(d + i, i) = 1;
  }
  Representation ad = adjoint_rep(big.L);
  for (int z = 0; z < 2 * d; ++z) {
    Matrix M = ad.rho[static_cast<std::size_t>(z)];
    out.add_nonzero("B-ad-invariance", {z}, (M.transpose() * B + B * M).a);
  }
  return out;
}

CheckReport check_nijenhuis_bialgebra(const LieAlgebra& L, const Matrix& N, const Cobracket& co,
                                      const Matrix& S) {
  int d = L.dim;
  if (co.dim != d || N.rows != d || N.cols != d || S.rows != d || S.cols != d)
    throw std::invalid_argument("check_nijenhuis_bialgebra: shape mismatch");
  CheckReport out;
  Representation ad = adjoint_rep(L);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Tensor2 r = co.eval(L.structure(i, j));
      const Tensor2& di = co.delta[static_cast<std::size_t>(i)];
      const Tensor2& dj = co.delta[static_cast<std::size_t>(j)];
      Tensor2 rhs = dj.apply_left(ad.rho[static_cast<std::size_t>(i)]) +
                    dj.apply_right(ad.rho[static_cast<std::size_t>(i)]) -
                    di.apply_left(ad.rho[static_cast<std::size_t>(j)]) -
                    di.apply_right(ad.rho[static_cast<std::size_t>(j)]);
      out.add_nonzero("bialgebra-compat", {i, j}, (r - rhs).flatten());
    }
  out.merge(check_admissible(L, N, ad, S), "adm-first");
  for (int i = 0; i < d; ++i) {
    Tensor2 t = co.delta[static_cast<std::size_t>(i)].apply_left(N).apply_right(S);
    Tensor2 dN = co.eval(N.col(i));
    t = t + dN.apply_left(N) - dN.apply_right(S);
    t = t - co.delta[static_cast<std::size_t>(i)].apply_left(N * N);
    out.add_nonzero("adm-sec", {i}, t.flatten());
  }
  return out;
}

MatchedPairData bialgebra_matched_pair(const LieAlgebra& L, const Matrix& N, const Cobracket& co,
                                       const Matrix& S) {
  MatchedPairData mp;
  mp.g = L;
  mp.h = dualize_coalgebra(co);
  mp.rho = dual_rep(adjoint_rep(L)).rho;
  mp.nu = dual_rep(adjoint_rep(mp.h)).rho;
  mp.N = N;
  mp.S = S.transpose();
  return mp;
}

EquivalenceSuiteReport equivalence_suite(const LieAlgebra& L, const Matrix& N, const Cobracket& co,
                                         const Matrix& S) {
  EquivalenceSuiteReport out;
  CheckReport bial;
  bial.merge(check_lie(L), "lie");
  bial.merge(check_nijenhuis(L, N), "nijenhuis");
  bial.merge(check_coalgebra(co), "coalgebra");
  bial.merge(check_coalgebra_nijenhuis(co, S), "coalgebra-nijenhuis");
  bial.merge(check_nijenhuis_bialgebra(L, N, co, S), "bialgebra");
  out.bialgebra_details = bial;
  out.bialgebra = bial.ok();

  MatchedPairData mp = bialgebra_matched_pair(L, N, co, S);
  out.matched_details = check_matched_pair(mp);
  out.matched_pair = out.matched_details.ok();

  BicrossedResult bic = bicrossed_unchecked(mp);
  NijenhuisPair big{bic.algebra, Matrix::direct_sum(N, S.transpose())};
  out.manin_details =
      check_manin_triple(big, NijenhuisPair{L, N}, NijenhuisPair{mp.h, S.transpose()});
  out.manin = out.manin_details.ok();
  return out;
}

Cobracket coboundary_cobracket(const LieAlgebra& L, const Tensor2& r) {
  if (r.dim != L.dim) throw std::invalid_argument("coboundary_cobracket: dimension mismatch");
  Cobracket out(L.dim);
  Representation ad = adjoint_rep(L);
  for (int i = 0; i < L.dim; ++i)
    out.delta[static_cast<std::size_t>(i)] =
        r.apply_left(ad.rho[static_cast<std::size_t>(i)]) +
        r.apply_right(ad.rho[static_cast<std::size_t>(i)]);
  return out;
}

CybeTensors cybe(const LieAlgebra& L, const Tensor2& r) {
  int d = L.dim;
  CybeTensors out{Tensor3(d), Tensor3(d), Tensor3(d), Tensor3(d)};
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const Rational& rab = r.at(a, b);
      if (sgn(rab) == 0) continue;
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) {
          const Rational& rce = r.at(c, e);
          if (sgn(rce) == 0) continue;
          Rational coef = rab * rce;
          const Vec& brac_ac = L.structure(a, c);  // [p_i, p_j]
          const Vec& brac_bc = L.structure(b, c);  // [q_i, p_j]
          const Vec& brac_be = L.structure(b, e);  // [q_i, q_j]
          for (int k = 0; k < d; ++k) {
            if (sgn(brac_ac[k]) != 0) out.t12_13.at(k, b, e) += coef * brac_ac[k];
            if (sgn(brac_bc[k]) != 0) out.t12_23.at(a, k, e) += coef * brac_bc[k];
            if (sgn(brac_be[k]) != 0) out.t13_23.at(a, c, k) += coef * brac_be[k];
          }
        }
    }
  out.sum = out.t12_13 + out.t12_23 + out.t13_23;
  return out;
}

CheckReport check_admissible_cybe(const LieAlgebra& L, const Matrix& N, const Matrix& S,
                                  const Tensor2& r) {
  CheckReport out;
  out.add_nonzero("acybe1-cybe-sum", {}, cybe(L, r).sum.flatten());
  out.add_nonzero("acybe2", {}, (r.apply_left(N) - r.apply_right(S)).flatten());
  out.add_nonzero("acybe3", {}, (r.apply_left(S) - r.apply_right(N)).flatten());
  return out;
}

GeneralCoboundaryReport check_general_coboundary(const LieAlgebra& L, const Matrix& N,
                                                 const Matrix& S, const Tensor2& r) {
  if (!check_nijenhuis(L, N).ok())
    throw std::invalid_argument("check_general_coboundary: (L, N) is not a Nijenhuis pair");
  if (!check_admissible(L, N, adjoint_rep(L), S).ok())
    throw std::invalid_argument("check_general_coboundary: S is not admissible");
  GeneralCoboundaryReport out;
  Representation ad = adjoint_rep(L);
  int d = L.dim;
  Tensor2 sym = r + r.flip();
  CybeTensors cy = cybe(L, r);
  Tensor2 u1 = r.apply_left(N) - r.apply_right(S);  // (N (x) Id - Id (x) S)(r)
  Tensor2 u2 = r.apply_left(S) - r.apply_right(N);  // (S (x) Id - Id (x) N)(r)
  bool intermediate_zero = true;
  for (int i = 0; i < d; ++i) {
    const Matrix& A = ad.rho[static_cast<std::size_t>(i)];
    out.conditions.add_nonzero("ad-inf1", {i},
                               (sym.apply_left(A) + sym.apply_right(A)).flatten());
    Tensor3 t = cy.sum.apply_slot(A, 0) + cy.sum.apply_slot(A, 1) + cy.sum.apply_slot(A, 2);
    out.conditions.add_nonzero("ad-inf2", {i}, t.flatten());
    Matrix ASx = ad.action(S.col(i));
    Tensor2 three = u2.apply_right(S * A - ASx) - u1.apply_left(S * A - ASx);
    out.conditions.add_nonzero("three-star", {i}, three.flatten());
    Matrix ANx = ad.action(N.col(i));
    Tensor2 fourA = u1.apply_right(ANx) + u1.apply_left(ANx) + u1.apply_right(S * A) -
                    u1.apply_left(N * A) - u1.apply_left(N).apply_right(A);
    Tensor2 fourB = u1.apply_right(A * S);
    out.conditions.add_nonzero("four-star", {i}, (fourA - fourB).flatten());
    if (!fourB.is_zero()) intermediate_zero = false;
  }
  out.intermediate_form_zero = intermediate_zero;
  out.conjunction = out.conditions.ok();
  Cobracket dr = coboundary_cobracket(L, r);
  out.direct_route = check_coalgebra(dr).ok() && check_coalgebra_nijenhuis(dr, S).ok() &&
                     check_nijenhuis_bialgebra(L, N, dr, S).ok();
  out.routes_agree = (out.conjunction == out.direct_route);
  return out;
}

CheckReport check_o_operator(const LieAlgebra& L, const Matrix& N, const NijenhuisRep& nrep,
                             const Matrix& r) {
  CheckReport out;
  out.add_nonzero("intertwine", {}, (N * r - r * nrep.S).a);
  out.merge(check_relative_rb(L, nrep.rep, r));
  return out;
}

OOperatorBialgebraResult o_operator_to_bialgebra(const LieAlgebra& L, const Matrix& N,
                                                 const NijenhuisRep& nrep, const Matrix& beta,
                                                 const Matrix& Q, const Matrix& r) {
  const Representation& rep = nrep.rep;
  int d = L.dim, m = rep.dimV;
  if (r.rows != d || r.cols != m || Q.rows != d || Q.cols != d || beta.rows != m ||
      beta.cols != m)
    throw std::invalid_argument("o_operator_to_bialgebra: shape mismatch");
  if (!check_admissible(L, N, rep, beta).ok())
    throw std::invalid_argument("o_operator_to_bialgebra: beta is not admissible");

  OOperatorBialgebraResult out;
  out.o_operator_side = check_o_operator(L, N, nrep, r).ok() && (r * beta == Q * r);

  out.big = semidirect(L, dual_rep(rep));
  out.big_N = Matrix::direct_sum(N, beta.transpose());
  out.big_S = Matrix::direct_sum(Q, nrep.S.transpose());
  Tensor2 rhat(d + m);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < m; ++i) {
      rhat.at(a, d + i) = r.at(a, i);
      rhat.at(d + i, a) = -r.at(a, i);
    }
  Tensor2 c2 = rhat.apply_left(out.big_N) - rhat.apply_right(out.big_S);
  Tensor2 c3 = rhat.apply_left(out.big_S) - rhat.apply_right(out.big_N);
  out.cybe_side = cybe(out.big, rhat).holds() && c2.is_zero() && c3.is_zero();
  out.equivalent = (out.o_operator_side == out.cybe_side);

  out.delta = coboundary_cobracket(out.big, rhat);
  out.bialgebra_valid = check_coalgebra(out.delta).ok() &&
                        check_coalgebra_nijenhuis(out.delta, out.big_S).ok() &&
                        check_nijenhuis_bialgebra(out.big, out.big_N, out.delta, out.big_S).ok();
  return out;
}

}  // namespace nijlie

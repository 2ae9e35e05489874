#include "nijlie/nijenhuis.hpp"

#include <stdexcept>

namespace nijlie {

CheckReport check_nijenhuis(const LieAlgebra& L, const Matrix& N) {
  if (N.rows != L.dim || N.cols != L.dim)
    throw std::invalid_argument("check_nijenhuis: N must be square of size dim");
  CheckReport out;
  int d = L.dim;
  AltMap fn = fn_bracket(L, AltMap::from_matrix(N), AltMap::from_matrix(N));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec Ni = N.col(i), Nj = N.col(j);
      Vec lhs = L.bracket(Ni, Nj);
      Vec inner = L.bracket(Ni, unit_vec(d, j));
      add_to(inner, L.bracket(unit_vec(d, i), Nj));
      add_to(inner, negate(N.apply(L.structure(i, j))));
      Vec res = sub(lhs, N.apply(inner));
      out.add_nonzero("nijenhuis", {i, j}, res);
      // [N,N]_FN = 2 * definitional residual; a mismatch would mean an
      // internal inconsistency between the two routes.
      Vec fnv = fn.eval_indices({i, j});
      out.add_nonzero("fn-cross-check", {i, j}, sub(fnv, scale(2, res)));
    }
  return out;
}

LieAlgebra deformed_bracket_unchecked(const LieAlgebra& L, const Matrix& N) {
  LieAlgebra out(L.dim);
  out.labels = L.labels;
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j) {
      Vec v = L.bracket(N.col(i), unit_vec(L.dim, j));
      add_to(v, L.bracket(unit_vec(L.dim, i), N.col(j)));
      add_to(v, negate(N.apply(L.structure(i, j))));
      out.set_bracket_raw(i, j, v);
    }
  return out;
}

LieAlgebra deformed_bracket(const NijenhuisPair& pair) {
  if (!check_nijenhuis(pair.L, pair.N).ok())
    throw std::invalid_argument("deformed_bracket: operator is not Nijenhuis");
  return deformed_bracket_unchecked(pair.L, pair.N);
}

CheckReport iterated_deformation_check(const NijenhuisPair& pair, int k, int l) {
  CheckReport out;
  Matrix Nk = pair.N.pow(k), Nl = pair.N.pow(l);
  out.merge(check_nijenhuis(pair.L, Nk), "N^k on L");
  LieAlgebra Lk = deformed_bracket_unchecked(pair.L, Nk);
  out.merge(check_nijenhuis(Lk, Nl), "N^l on L^{N^k}");
  LieAlgebra twice = deformed_bracket_unchecked(Lk, Nl);
  LieAlgebra once = deformed_bracket_unchecked(pair.L, pair.N.pow(k + l));
  for (int i = 0; i < pair.L.dim; ++i)
    for (int j = 0; j < pair.L.dim; ++j)
      out.add_nonzero("iterated-bracket", {i, j}, sub(twice.structure(i, j), once.structure(i, j)));
  return out;
}

AltMap dN(const NijenhuisPair& pair, const AltMap& f) {
  const LieAlgebra& L = pair.L;
  const Matrix& N = pair.N;
  int d = L.dim;
  if (f.dim != d || f.target_dim != d)
    throw std::invalid_argument("dN: f must take values in g");
  int n = f.arity;
  if (n == 0) {
    // d_N(x)(y) = [N(y), x] - N[y, x]
    AltMap out(1, d, d);
    Vec x = f.coeff(0);
    for (int j = 0; j < d; ++j) {
      Vec v = L.bracket(N.col(j), x);
      add_to(v, negate(N.apply(L.bracket(unit_vec(d, j), x))));
      out.set_coeff({j}, v);
    }
    return out;
  }
  // The last group of the explicit expansion is -N applied to the adjoint
  // CE differential of f.
  AltMap ce = ce_differential(adjoint_rep(L), f);
  AltMap out(n + 1, d, d);
  for (const auto& tuple : combos(d, n + 1)) {
    Vec acc = zero_vec(d);
    for (int i = 0; i <= n; ++i) {
      std::vector<int> rest;
      for (int t = 0; t <= n; ++t)
        if (t != i) rest.push_back(tuple[static_cast<std::size_t>(t)]);
      Vec fv = f.eval_indices(rest);
      int xi = tuple[static_cast<std::size_t>(i)];
      int sign = (i % 2 == 0) ? 1 : -1;  // (-1)^{i+1}, 1-based
      add_scaled(acc, Rational(sign), L.bracket(N.col(xi), fv));
    }
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        std::vector<int> rest;
        for (int t = 0; t <= n; ++t)
          if (t != i && t != j) rest.push_back(tuple[static_cast<std::size_t>(t)]);
        int xi = tuple[static_cast<std::size_t>(i)], xj = tuple[static_cast<std::size_t>(j)];
        Vec db = L.bracket(N.col(xi), unit_vec(d, xj));
        add_to(db, L.bracket(unit_vec(d, xi), N.col(xj)));
        add_to(db, negate(N.apply(L.structure(xi, xj))));
        int sign = ((i + j) % 2 == 0) ? 1 : -1;  // (-1)^{i+j}, 1-based
        for (std::size_t s = 0; s < rest.size(); ++s) idx[s + 1] = rest[s];
        for (int kk = 0; kk < d; ++kk) {
          if (sgn(db[kk]) == 0) continue;
          idx[0] = kk;
          add_scaled(acc, Rational(sign) * db[kk], f.eval_indices(idx));
        }
      }
    add_to(acc, negate(N.apply(ce.eval_indices(tuple))));
    out.set_coeff(tuple, acc);
  }
  return out;
}

Matrix dN_matrix(const NijenhuisPair& pair, int n) {
  return altmap_map_matrix(n, pair.L.dim, pair.L.dim,
                           [&](const AltMap& f) { return dN(pair, f); });
}

CochainComplexReport nijenhuis_cohomology(const NijenhuisPair& pair, int up_to) {
  int d = pair.L.dim;
  if (up_to > d) up_to = d;
  return complex_report(
      [&](int n) { return static_cast<int>(binom(d, n)) * d; },
      [&](int n) { return dN_matrix(pair, n); }, up_to);
}

AltMap chain_map_phi(const LieAlgebra& L, const AltMap& f) {
  AltMap df = ce_differential(adjoint_rep(L), f);
  return (f.arity % 2 == 0) ? -df : df;  // (-1)^{n+1}
}

CheckReport check_relative_rb(const LieAlgebra& L, const Representation& rep, const Matrix& r) {
  if (r.rows != L.dim || r.cols != rep.dimV)
    throw std::invalid_argument("check_relative_rb: r must map V to g");
  CheckReport out;
  for (int i = 0; i < rep.dimV; ++i)
    for (int j = i + 1; j < rep.dimV; ++j) {
      Vec ru = r.col(i), rv = r.col(j);
      Vec lhs = L.bracket(ru, rv);
      Vec inner = rep.action(ru).apply(unit_vec(rep.dimV, j));
      add_to(inner, negate(rep.action(rv).apply(unit_vec(rep.dimV, i))));
      out.add_nonzero("relative-rb", {i, j}, sub(lhs, r.apply(inner)));
    }
  return out;
}

NijenhuisPair lift_rb(const LieAlgebra& L, const Representation& rep, const Matrix& r) {
  if (!check_relative_rb(L, rep, r).ok())
    throw std::invalid_argument("lift_rb: not a relative Rota-Baxter operator");
  LieAlgebra big = semidirect(L, rep);
  Matrix N(big.dim, big.dim);
  for (int j = 0; j < rep.dimV; ++j)
    for (int i = 0; i < L.dim; ++i) N.at(i, L.dim + j) = r.at(i, j);
  return NijenhuisPair{big, N};
}

AltMap dr(const LieAlgebra& L, const Representation& rep, const Matrix& r, const AltMap& f) {
  int d = L.dim, m = rep.dimV;
  if (f.dim != m || f.target_dim != d)
    throw std::invalid_argument("dr: f must be a map on V with values in g");
  int n = f.arity;
  if (n == 0) {
    AltMap out(1, m, d);
    Vec x = f.coeff(0);
    for (int i = 0; i < m; ++i) {
      Vec v = L.bracket(r.col(i), x);
      add_to(v, r.apply(rep.action(x).apply(unit_vec(m, i))));
      out.set_coeff({i}, v);
    }
    return out;
  }
  AltMap out(n + 1, m, d);
  for (const auto& tuple : combos(m, n + 1)) {
    Vec acc = zero_vec(d);
    for (int i = 0; i <= n; ++i) {
      std::vector<int> rest;
      for (int t = 0; t <= n; ++t)
        if (t != i) rest.push_back(tuple[static_cast<std::size_t>(t)]);
      Vec fv = f.eval_indices(rest);
      int vi = tuple[static_cast<std::size_t>(i)];
      int sign = (i % 2 == 0) ? 1 : -1;
      Vec term = L.bracket(r.col(vi), fv);
      add_to(term, r.apply(rep.action(fv).apply(unit_vec(m, vi))));
      add_scaled(acc, Rational(sign), term);
    }
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        std::vector<int> rest;
        for (int t = 0; t <= n; ++t)
          if (t != i && t != j) rest.push_back(tuple[static_cast<std::size_t>(t)]);
        int vi = tuple[static_cast<std::size_t>(i)], vj = tuple[static_cast<std::size_t>(j)];
        Vec first = rep.action(r.col(vi)).apply(unit_vec(m, vj));
        add_to(first, negate(rep.action(r.col(vj)).apply(unit_vec(m, vi))));
        int sign = ((i + j) % 2 == 0) ? 1 : -1;
        for (std::size_t s = 0; s < rest.size(); ++s) idx[s + 1] = rest[s];
        for (int kk = 0; kk < m; ++kk) {
          if (sgn(first[kk]) == 0) continue;
          idx[0] = kk;
          add_scaled(acc, Rational(sign) * first[kk], f.eval_indices(idx));
        }
      }
    out.set_coeff(tuple, acc);
  }
  return out;
}

AltMap embed_rb_cochain(const AltMap& f, int dim_g) {
  int m = f.dim, n = f.arity, big = dim_g + m;
  AltMap out(n, big, big);
  for (const auto& tuple : combos(m, n)) {
    std::vector<int> shifted = tuple;
    for (auto& x : shifted) x += dim_g;
    Vec val = f.eval_indices(tuple);
    Vec big_val = zero_vec(big);
    for (int i = 0; i < dim_g; ++i) big_val[i] = val[i];
    out.set_coeff(shifted, big_val);
  }
  return out;
}

CheckReport check_order_n(const OrderNDeformation& def) {
  CheckReport out;
  const NijenhuisPair& base = def.base;
  int n = static_cast<int>(def.terms.size());
  std::vector<AltMap> terms;
  terms.reserve(def.terms.size());
  for (const auto& t : def.terms) terms.push_back(AltMap::from_matrix(t));
  Rational half(1, 2);
  for (int p = 1; p <= n; ++p) {
    AltMap res = dN(base, terms[static_cast<std::size_t>(p - 1)]);
    for (int i = 1; i <= p - 1; ++i) {
      int j = p - i;
      AltMap fn = fn_bracket(base.L, terms[static_cast<std::size_t>(i - 1)],
                             terms[static_cast<std::size_t>(j - 1)]);
      res = res + fn * half;
    }
    for (int combo = 0; combo < res.combo_count(); ++combo) {
      auto tuple = combo_unrank(combo, 2, base.L.dim);
      tuple.insert(tuple.begin(), p);  // record the order alongside the pair
      out.add_nonzero("order-" + std::to_string(p), tuple, res.coeff(combo));
    }
  }
  return out;
}

ObstructionResult obstruction(const OrderNDeformation& def) {
  if (!check_order_n(def).ok())
    throw std::invalid_argument("obstruction: not a valid order-n deformation");
  const NijenhuisPair& base = def.base;
  int n = static_cast<int>(def.terms.size());
  ObstructionResult out;
  AltMap ob(2, base.L.dim, base.L.dim);
  Rational mhalf(-1, 2);
  for (int i = 1; i <= n; ++i) {
    int j = n + 1 - i;
    if (j < 1 || j > n) continue;
    AltMap fn = fn_bracket(base.L, AltMap::from_matrix(def.terms[static_cast<std::size_t>(i - 1)]),
                           AltMap::from_matrix(def.terms[static_cast<std::size_t>(j - 1)]));
    ob = ob + fn * mhalf;
  }
  out.ob = ob;
  out.is_cocycle = dN(base, ob).is_zero();
  auto sol = solve(dN_matrix(base, 1), ob.flatten());
  if (sol)
    out.witness = AltMap::from_flat(1, base.L.dim, base.L.dim, *sol).to_matrix();
  return out;
}

}  // namespace nijlie

#include "nijlie/cone.hpp"

#include <stdexcept>

namespace nijlie {

AltMap partial_NS(const Matrix& N, const Matrix& S, const AltMap& f) {
  int n = f.arity, d = f.dim;
  if (n == 0) return f;
  std::vector<Matrix> Spow(static_cast<std::size_t>(n) + 1);
  Spow[0] = Matrix::identity(S.rows);
  for (int k = 1; k <= n; ++k) Spow[k] = Spow[k - 1] * S;
  AltMap out(n, d, f.target_dim);
  for (const auto& tuple : combos(d, n)) {
    Vec acc = zero_vec(f.target_dim);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      int k = __builtin_popcount(mask);
      std::vector<Vec> args;
      args.reserve(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        int xi = tuple[static_cast<std::size_t>(i)];
        if (mask & (1u << i))
          args.push_back(unit_vec(d, xi));  // kept slot
        else
          args.push_back(N.col(xi));
      }
      Vec term = Spow[static_cast<std::size_t>(k)].apply(f.eval(args));
      add_scaled(acc, Rational(k % 2 == 0 ? 1 : -1), term);
    }
    out.set_coeff(tuple, acc);
  }
  return out;
}

AltMap partial_NS_expanded(const Matrix& N, const Matrix& S, const AltMap& f) {
  int n = f.arity, d = f.dim;
  if (n == 0) return f;
  AltMap out(n, d, f.target_dim);
  for (const auto& tuple : combos(d, n)) {
    Vec acc = zero_vec(f.target_dim);
    std::vector<Vec> args(static_cast<std::size_t>(n));
    std::function<void(int, int)> rec = [&](int slot, int kept) {
      if (slot == n) {
        Vec v = f.eval(args);
        for (int a = 0; a < kept; ++a) v = S.apply(v);
        add_scaled(acc, Rational(kept % 2 == 0 ? 1 : -1), v);
        return;
      }
      int xi = tuple[static_cast<std::size_t>(slot)];
      args[static_cast<std::size_t>(slot)] = N.col(xi);
      rec(slot + 1, kept);
      args[static_cast<std::size_t>(slot)] = unit_vec(d, xi);
      rec(slot + 1, kept + 1);
    };
    rec(0, 0);
    out.set_coeff(tuple, acc);
  }
  return out;
}

AltMap dNS(const Representation& rep, const Matrix& N, const Matrix& S, const AltMap& f) {
  const LieAlgebra& L = rep.base;
  int d = L.dim, m = rep.dimV;
  if (f.dim != d || f.target_dim != m)
    throw std::invalid_argument("dNS: f must be a map on g with values in V");
  int n = f.arity;
  if (n == 0) {
    AltMap out(1, d, m);
    Vec v = f.coeff(0);
    for (int i = 0; i < d; ++i) {
      Vec t = rep.action(N.col(i)).apply(v);
      add_to(t, negate(S.apply(rep.rho[i].apply(v))));
      out.set_coeff({i}, t);
    }
    return out;
  }
  AltMap ce = ce_differential(rep, f);
  AltMap out(n + 1, d, m);
  for (const auto& tuple : combos(d, n + 1)) {
    Vec acc = zero_vec(m);
    for (int i = 0; i <= n; ++i) {
      std::vector<int> rest;
      for (int t = 0; t <= n; ++t)
        if (t != i) rest.push_back(tuple[static_cast<std::size_t>(t)]);
      Vec fv = f.eval_indices(rest);
      int xi = tuple[static_cast<std::size_t>(i)];
      int sign = (i % 2 == 0) ? 1 : -1;
      add_scaled(acc, Rational(sign), rep.action(N.col(xi)).apply(fv));
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
        int sign = ((i + j) % 2 == 0) ? 1 : -1;
        for (std::size_t s = 0; s < rest.size(); ++s) idx[s + 1] = rest[s];
        for (int kk = 0; kk < d; ++kk) {
          if (sgn(db[kk]) == 0) continue;
          idx[0] = kk;
          add_scaled(acc, Rational(sign) * db[kk], f.eval_indices(idx));
        }
      }
    add_to(acc, negate(S.apply(ce.eval_indices(tuple))));
    out.set_coeff(tuple, acc);
  }
  return out;
}

Matrix dNS_matrix(const Representation& rep, const Matrix& N, const Matrix& S, int n) {
  return altmap_map_matrix(n, rep.base.dim, rep.dimV,
                           [&](const AltMap& f) { return dNS(rep, N, S, f); });
}

ConeCochain cone_zero(int degree, int dim, int dimV) {
  ConeCochain c;
  c.chi = AltMap(degree, dim, dimV);
  if (degree >= 2) c.F = AltMap(degree - 1, dim, dimV);
  return c;
}

ConeCochain cone_from_flat(int degree, int dim, int dimV, const Vec& flat) {
  ConeCochain c = cone_zero(degree, dim, dimV);
  std::size_t nchi = c.chi.c.size();
  if (flat.size() != nchi + (c.F ? c.F->c.size() : 0))
    throw std::invalid_argument("cone_from_flat: size mismatch");
  for (std::size_t i = 0; i < nchi; ++i) c.chi.c[i] = flat[i];
  if (c.F)
    for (std::size_t i = 0; i < c.F->c.size(); ++i) c.F->c[i] = flat[nchi + i];
  return c;
}

int cone_dim(int degree, int dim, int dimV) {
  if (degree <= 0) return 0;
  if (degree == 1) return dim * dimV;
  return static_cast<int>(binom(dim, degree) + binom(dim, degree - 1)) * dimV;
}

ConeCochain nlie_differential(const NijenhuisPair& pair, const NijenhuisRep& nrep,
                              const ConeCochain& c) {
  int n = c.degree();
  ConeCochain out;
  out.chi = ce_differential(nrep.rep, c.chi);
  AltMap pc = partial_NS(pair.N, nrep.S, c.chi);
  if (n == 1) {
    out.F = -pc;
    return out;
  }
  if (!c.F) throw std::invalid_argument("nlie_differential: missing F component");
  AltMap dF = dNS(nrep.rep, pair.N, nrep.S, *c.F);
  out.F = (n % 2 == 0) ? dF + pc : dF - pc;
  return out;
}

Matrix nlie_matrix(const NijenhuisPair& pair, const NijenhuisRep& nrep, int n) {
  int d = pair.L.dim, m = nrep.rep.dimV;
  int in_dim = cone_dim(n, d, m);
  int out_dim = cone_dim(n + 1, d, m);
  Matrix mat(out_dim, in_dim);
  for (int j = 0; j < in_dim; ++j) {
    Vec basis = zero_vec(in_dim);
    basis[j] = 1;
    ConeCochain c = cone_from_flat(n, d, m, basis);
    Vec img = nlie_differential(pair, nrep, c).flatten();
    for (int i = 0; i < out_dim; ++i) mat.at(i, j) = img[i];
  }
  return mat;
}

CochainComplexReport nlie_cohomology(const NijenhuisPair& pair, const NijenhuisRep& nrep,
                                     int up_to) {
  int d = pair.L.dim, m = nrep.rep.dimV;
  if (up_to > d + 1) up_to = d + 1;
  return complex_report(
      [&](int n) { return cone_dim(n, d, m); },
      [&](int n) {
        if (n == 0) return Matrix(cone_dim(1, d, m), 0);
        return nlie_matrix(pair, nrep, n);
      },
      up_to);
}

NijenhuisRep adjoint_nijenhuis_rep(const NijenhuisPair& pair) {
  return NijenhuisRep{adjoint_rep(pair.L), pair.N};
}

CheckReport certify_2cocycle(const NijenhuisPair& pair, const NijenhuisRep& nrep,
                             const AltMap& chi, const AltMap& F) {
  const LieAlgebra& L = pair.L;
  const Matrix& N = pair.N;
  const Matrix& S = nrep.S;
  const Representation& rep = nrep.rep;
  int d = L.dim;
  if (chi.arity != 2 || F.arity != 1)
    throw std::invalid_argument("certify_2cocycle: expected (arity 2, arity 1)");
  CheckReport out;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        Vec r = rep.rho[i].apply(chi.eval_indices({j, k}));
        add_to(r, rep.rho[j].apply(chi.eval_indices({k, i})));
        add_to(r, rep.rho[k].apply(chi.eval_indices({i, j})));
        add_to(r, negate(chi.eval({L.structure(i, j), unit_vec(d, k)})));
        add_to(r, negate(chi.eval({L.structure(j, k), unit_vec(d, i)})));
        add_to(r, negate(chi.eval({L.structure(k, i), unit_vec(d, j)})));
        out.add_nonzero("cocycle-chi", {i, j, k}, r);
      }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec Fi = F.eval_indices({i}), Fj = F.eval_indices({j});
      Vec r = rep.action(N.col(i)).apply(Fj);
      add_to(r, negate(rep.action(N.col(j)).apply(Fi)));
      Vec db = L.bracket(N.col(i), unit_vec(d, j));
      add_to(db, L.bracket(unit_vec(d, i), N.col(j)));
      add_to(db, negate(N.apply(L.structure(i, j))));
      add_to(r, negate(F.eval({db})));
      Vec inner = rep.rho[i].apply(Fj);
      add_to(inner, negate(rep.rho[j].apply(Fi)));
      add_to(inner, negate(F.eval({L.structure(i, j)})));
      add_to(r, negate(S.apply(inner)));
      add_to(r, chi.eval({N.col(i), N.col(j)}));
      Vec inner2 = chi.eval({N.col(i), unit_vec(d, j)});
      add_to(inner2, chi.eval({unit_vec(d, i), N.col(j)}));
      add_to(inner2, negate(S.apply(chi.eval_indices({i, j}))));
      add_to(r, negate(S.apply(inner2)));
      out.add_nonzero("cocycle-mixed", {i, j}, r);
    }
  return out;
}

std::optional<Matrix> certify_2coboundary(const NijenhuisPair& pair, const NijenhuisRep& nrep,
                                          const AltMap& chi, const AltMap& F) {
  if (!certify_2cocycle(pair, nrep, chi, F).ok())
    throw std::invalid_argument("certify_2coboundary: input is not a 2-cocycle");
  Matrix d1 = nlie_matrix(pair, nrep, 1);
  auto sol = solve(d1, concat(chi.flatten(), F.flatten()));
  if (!sol) return std::nullopt;
  return AltMap::from_flat(1, pair.L.dim, nrep.rep.dimV, *sol).to_matrix();
}

namespace {

// Coordinates of a cocycle in the chosen representative basis, modulo the
// image space.  Unique because representatives are independent mod image.
Vec h_coords(const Matrix& reps, const Matrix& image, const Vec& v) {
  Matrix sys = hstack(reps, image);
  auto sol = solve(sys, v);
  if (!sol) throw std::logic_error("h_coords: vector is not a cocycle class member");
  Vec out(static_cast<std::size_t>(reps.cols));
  for (int i = 0; i < reps.cols; ++i) out[i] = (*sol)[i];
  return out;
}

}  // namespace

ExactSequenceReport exact_sequence_report(const NijenhuisPair& pair, const NijenhuisRep& nrep,
                                          int up_to) {
  const int d = pair.L.dim, m = nrep.rep.dimV;
  const Representation& rep = nrep.rep;
  if (up_to < 3) up_to = 3;
  if (up_to > d + 1) up_to = d + 1;
  ExactSequenceReport out;

  auto dim_hom = [&](int n) { return static_cast<int>(binom(d, n)) * m; };
  auto i_mat = [&](int n) {  // Hom(∧^{n-1} g, V) -> C^n
    Matrix mat(cone_dim(n, d, m), dim_hom(n - 1));
    int off = dim_hom(n);
    for (int j = 0; j < mat.cols; ++j) mat.at(off + j, j) = 1;
    return mat;
  };
  auto p_mat = [&](int n) {  // C^n -> Hom(∧^n g, V)
    Matrix mat(dim_hom(n), cone_dim(n, d, m));
    for (int i = 0; i < mat.rows; ++i) mat.at(i, i) = 1;
    return mat;
  };

  bool commute = true, inj = true, surj = true, mid = true;
  for (int n = 2; n <= up_to; ++n) {
    Matrix In = i_mat(n), Pn = p_mat(n);
    Matrix cone_d = nlie_matrix(pair, nrep, n);
    commute = commute && (cone_d * In == i_mat(n + 1) * dNS_matrix(rep, pair.N, nrep.S, n - 1));
    commute = commute && (p_mat(n + 1) * cone_d == ce_matrix(rep, n) * Pn);
    inj = inj && (rank(In) == In.cols);
    surj = surj && (rank(Pn) == Pn.rows);
    Matrix pi = Pn * In;
    mid = mid && pi.is_zero() && (Pn.cols - rank(Pn) == rank(In));
  }
  out.chain_maps_commute = commute;
  out.i_injective = inj;
  out.p_surjective = surj;
  out.middle_exact = mid;

  // induced maps on the window H^2(N;S) -> H^3_NLie -> H^3_CE -> H^3(N;S)
  Matrix ns1 = dNS_matrix(rep, pair.N, nrep.S, 1);
  Matrix ns2 = dNS_matrix(rep, pair.N, nrep.S, 2);
  Matrix ns3 = dNS_matrix(rep, pair.N, nrep.S, 3);
  Matrix cone2 = nlie_matrix(pair, nrep, 2);
  Matrix cone3 = nlie_matrix(pair, nrep, 3);
  Matrix ce2 = ce_matrix(rep, 2);
  Matrix ce3 = ce_matrix(rep, 3);

  Matrix reps_h2ns = coset_representatives(kernel_basis(ns2), ns1);
  Matrix reps_h3c = coset_representatives(kernel_basis(cone3), cone2);
  Matrix reps_h3ce = coset_representatives(kernel_basis(ce3), ce2);
  Matrix reps_h3ns = coset_representatives(kernel_basis(ns3), ns2);
  out.h_nlie = {reps_h3c.cols};
  out.h_ce = {reps_h3ce.cols};
  out.h_ns = {reps_h2ns.cols, reps_h3ns.cols};

  Matrix map_i(reps_h3c.cols, reps_h2ns.cols);
  for (int j = 0; j < reps_h2ns.cols; ++j) {
    Vec v = concat(zero_vec(dim_hom(3)), reps_h2ns.col(j));
    Vec a = h_coords(reps_h3c, cone2, v);
    for (int i = 0; i < map_i.rows; ++i) map_i.at(i, j) = a[i];
  }
  Matrix map_p(reps_h3ce.cols, reps_h3c.cols);
  for (int j = 0; j < reps_h3c.cols; ++j) {
    Vec full = reps_h3c.col(j);
    Vec chi_part(full.begin(), full.begin() + dim_hom(3));
    Vec a = h_coords(reps_h3ce, ce2, chi_part);
    for (int i = 0; i < map_p.rows; ++i) map_p.at(i, j) = a[i];
  }
  Matrix map_conn(reps_h3ns.cols, reps_h3ce.cols);
  for (int j = 0; j < reps_h3ce.cols; ++j) {
    AltMap chi = AltMap::from_flat(3, d, m, reps_h3ce.col(j));
    AltMap w = -partial_NS(pair.N, nrep.S, chi);
    Vec a = h_coords(reps_h3ns, ns2, w.flatten());
    for (int i = 0; i < map_conn.rows; ++i) map_conn.at(i, j) = a[i];
  }

  out.window_composes_to_zero = (map_p * map_i).is_zero() && (map_conn * map_p).is_zero();
  bool exact_at_nlie = (rank(map_i) == map_p.cols - rank(map_p));
  bool exact_at_ce = (rank(map_p) == map_conn.cols - rank(map_conn));
  out.window_exact = exact_at_nlie && exact_at_ce;
  return out;
}

}  // namespace nijlie

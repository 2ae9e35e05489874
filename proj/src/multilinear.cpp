#include "nijlie/multilinear.hpp"

#include <stdexcept>

namespace nijlie {

namespace {

// f evaluated with one general vector in a chosen slot and basis indices
// elsewhere. Used by every alternating-sum formula below.
Vec eval_with_vec(const AltMap& f, const Vec& v, const std::vector<int>& rest) {
  Vec out = zero_vec(f.target_dim);
  std::vector<int> idx(static_cast<std::size_t>(f.arity));
  for (std::size_t i = 0; i < rest.size(); ++i) idx[i + 1] = rest[i];
  for (int k = 0; k < f.dim; ++k) {
    if (sgn(v[k]) == 0) continue;
    idx[0] = k;
    add_scaled(out, v[k], f.eval_indices(idx));
  }
  return out;
}

}  // namespace

AltMap insertion(const AltMap& P, const AltMap& Q) {
  int m = P.arity, n = Q.arity;
  if (m < 1 || n < 1) throw std::invalid_argument("insertion: arities must be >= 1");
  if (P.dim != Q.dim || P.target_dim != P.dim)
    throw std::invalid_argument("insertion: P must take values in the source space");
  AltMap out(m + n - 1, P.dim, Q.target_dim);
  auto sh = shuffles(m, n - 1);
  for (const auto& tuple : combos(P.dim, m + n - 1)) {
    Vec acc = zero_vec(Q.target_dim);
    for (const auto& s : sh) {
      std::vector<int> pidx, rest;
      pidx.reserve(s.first.size());
      rest.reserve(s.second.size());
      for (int p : s.first) pidx.push_back(tuple[static_cast<std::size_t>(p)]);
      for (int p : s.second) rest.push_back(tuple[static_cast<std::size_t>(p)]);
      Vec pv = P.eval_indices(pidx);
      if (is_zero(pv)) continue;
      Vec qv = eval_with_vec(Q, pv, rest);
      add_scaled(acc, Rational(s.sign), qv);
    }
    out.set_coeff(tuple, acc);
  }
  return out;
}

AltMap nr_bracket(const AltMap& P, const AltMap& Q) {
  if (P.target_dim != P.dim || Q.target_dim != Q.dim)
    throw std::invalid_argument("nr_bracket: maps must take values in the source space");
  int m = P.arity, n = Q.arity;
  AltMap r = insertion(P, Q);
  AltMap s = insertion(Q, P);
  int sign = (((m - 1) * (n - 1)) % 2 == 0) ? 1 : -1;
  return (sign > 0) ? r - s : r + s;
}

AltMap cup_product(const LieAlgebra& L, const AltMap& P, const AltMap& Q) {
  if (P.target_dim != L.dim || Q.target_dim != L.dim || P.dim != L.dim || Q.dim != L.dim)
    throw std::invalid_argument("cup_product: maps must take values in g");
  int m = P.arity, n = Q.arity;
  if (m < 1 || n < 1) throw std::invalid_argument("cup_product: arities must be >= 1");
  AltMap out(m + n, L.dim, L.dim);
  auto sh = shuffles(m, n);
  for (const auto& tuple : combos(L.dim, m + n)) {
    Vec acc = zero_vec(L.dim);
    for (const auto& s : sh) {
      std::vector<int> pidx, qidx;
      for (int p : s.first) pidx.push_back(tuple[static_cast<std::size_t>(p)]);
      for (int p : s.second) qidx.push_back(tuple[static_cast<std::size_t>(p)]);
      Vec pv = P.eval_indices(pidx);
      if (is_zero(pv)) continue;
      Vec qv = Q.eval_indices(qidx);
      if (is_zero(qv)) continue;
      add_scaled(acc, Rational(s.sign), L.bracket(pv, qv));
    }
    out.set_coeff(tuple, acc);
  }
  return out;
}

AltMap ce_differential(const Representation& rep, const AltMap& f) {
  if (f.target_dim != rep.dimV || f.dim != rep.base.dim)
    throw std::invalid_argument("ce_differential: target mismatch");
  int d = rep.base.dim, n = f.arity;
  if (n == 0) {
    AltMap out(1, d, rep.dimV);
    Vec v = f.coeff(0);
    for (int i = 0; i < d; ++i) out.set_coeff({i}, rep.act(i, v));
    return out;
  }
  AltMap out(n + 1, d, rep.dimV);
  for (const auto& tuple : combos(d, n + 1)) {
    Vec acc = zero_vec(rep.dimV);
    for (int i = 0; i <= n; ++i) {
      std::vector<int> rest;
      for (int t = 0; t <= n; ++t)
        if (t != i) rest.push_back(tuple[static_cast<std::size_t>(t)]);
      Vec fv = f.eval_indices(rest);
      int sign = (i % 2 == 0) ? 1 : -1;  // (-1)^{i+1} with 1-based i
      add_scaled(acc, Rational(sign), rep.act(tuple[static_cast<std::size_t>(i)], fv));
    }
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        std::vector<int> rest;
        for (int t = 0; t <= n; ++t)
          if (t != i && t != j) rest.push_back(tuple[static_cast<std::size_t>(t)]);
        const Vec& br = rep.base.structure(tuple[static_cast<std::size_t>(i)],
                                           tuple[static_cast<std::size_t>(j)]);
        int sign = ((i + j) % 2 == 0) ? 1 : -1;  // (-1)^{i+j} with 1-based i,j
        Vec fv = eval_with_vec(f, br, rest);
        add_scaled(acc, Rational(sign), fv);
      }
    out.set_coeff(tuple, acc);
  }
  return out;
}

AltMap fn_bracket(const LieAlgebra& L, const AltMap& P, const AltMap& Q) {
  int m = P.arity, n = Q.arity;
  Representation ad = adjoint_rep(L);
  AltMap dP = ce_differential(ad, P);
  AltMap dQ = ce_differential(ad, Q);
  AltMap out = cup_product(L, P, Q);
  AltMap t2 = insertion(dP, Q);
  AltMap t3 = insertion(dQ, P);
  int s2 = (m % 2 == 0) ? 1 : -1;
  int s3 = (((m + 1) * n) % 2 == 0) ? 1 : -1;
  out = (s2 > 0) ? out + t2 : out - t2;
  out = (s3 > 0) ? out - t3 : out + t3;
  return out;
}

Matrix ce_matrix(const Representation& rep, int n) {
  return altmap_map_matrix(n, rep.base.dim, rep.dimV,
                           [&](const AltMap& f) { return ce_differential(rep, f); });
}

std::vector<int> CochainComplexReport::h_dims() const {
  std::vector<int> out;
  out.reserve(degrees.size());
  for (const auto& d : degrees) out.push_back(d.dim_h);
  return out;
}

CochainComplexReport complex_report(const std::function<int(int)>& dim_c,
                                    const std::function<Matrix(int)>& dmat, int up_to) {
  CochainComplexReport rep;
  int prev_rank = 0;
  for (int n = 0; n <= up_to; ++n) {
    CochainComplexReport::Degree deg;
    deg.n = n;
    deg.dim_cochains = dim_c(n);
    deg.d = dmat(n);
    deg.rank_d = rank(deg.d);
    deg.dim_kernel = deg.dim_cochains - deg.rank_d;
    deg.dim_h = deg.dim_kernel - prev_rank;
    prev_rank = deg.rank_d;
    rep.degrees.push_back(std::move(deg));
  }
  return rep;
}

CochainComplexReport ce_cohomology(const Representation& rep, int up_to) {
  if (up_to > rep.base.dim + 1) throw std::invalid_argument("ce_cohomology: up_to > dim + 1");
  int d = rep.base.dim, m = rep.dimV;
  return complex_report(
      [&](int n) { return static_cast<int>(binom(d, n)) * m; },
      [&](int n) { return ce_matrix(rep, n); }, up_to);
}

}  // namespace nijlie

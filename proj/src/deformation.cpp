#include "nijlie/deformation.hpp"

#include <stdexcept>

namespace nijlie {

namespace {

// mu_0 is the bracket, N_0 = N; higher terms from the deformation.
Vec mu_eval(const TruncatedDeformation& def, int i, const Vec& x, const Vec& y) {
  if (i == 0) return def.base.L.bracket(x, y);
  return def.mu_terms[static_cast<std::size_t>(i - 1)].eval({x, y});
}

const Matrix& n_term(const TruncatedDeformation& def, int i) {
  return i == 0 ? def.base.N : def.N_terms[static_cast<std::size_t>(i - 1)];
}

}  // namespace

CheckReport check_truncated(const TruncatedDeformation& def) {
  if (def.mu_terms.size() != def.N_terms.size())
    throw std::invalid_argument("check_truncated: mu and N term counts differ");
  const LieAlgebra& L = def.base.L;
  int d = L.dim, n = def.order();
  CheckReport out;
  for (int p = 1; p <= n; ++p) {
    // Jacobi convolution: sum_{i+j=p} mu_i(mu_j(x,y),z) + c.p. = 0
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b)
        for (int c = b + 1; c < d; ++c) {
          Vec x = unit_vec(d, a), y = unit_vec(d, b), z = unit_vec(d, c);
          Vec r = zero_vec(d);
          for (int i = 0; i <= p; ++i) {
            int j = p - i;
            add_to(r, mu_eval(def, i, mu_eval(def, j, x, y), z));
            add_to(r, mu_eval(def, i, mu_eval(def, j, y, z), x));
            add_to(r, mu_eval(def, i, mu_eval(def, j, z, x), y));
          }
          out.add_nonzero("jacobi-order-" + std::to_string(p), {a, b, c}, r);
        }
    // Nijenhuis convolution:
    // sum_{i+j+k=p} mu_i(N_j x, N_k y)
    //   = sum_{i+j+k=p} N_i(mu_j(N_k x, y) + mu_j(x, N_k y) - N_k mu_j(x, y))
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        Vec x = unit_vec(d, a), y = unit_vec(d, b);
        Vec lhs = zero_vec(d), rhs = zero_vec(d);
        for (int i = 0; i <= p; ++i)
          for (int j = 0; i + j <= p; ++j) {
            int k = p - i - j;
            add_to(lhs, mu_eval(def, i, n_term(def, j).apply(x), n_term(def, k).apply(y)));
            Vec inner = mu_eval(def, j, n_term(def, k).apply(x), y);
            add_to(inner, mu_eval(def, j, x, n_term(def, k).apply(y)));
            add_to(inner, negate(n_term(def, k).apply(mu_eval(def, j, x, y))));
            add_to(rhs, n_term(def, i).apply(inner));
          }
        out.add_nonzero("nijenhuis-order-" + std::to_string(p), {a, b}, sub(lhs, rhs));
      }
  }
  return out;
}

ConeCochain infinitesimal_to_cocycle(const TruncatedDeformation& def) {
  if (def.order() < 1) throw std::invalid_argument("infinitesimal_to_cocycle: order must be 1");
  if (!check_truncated(def).ok())
    throw std::invalid_argument("infinitesimal_to_cocycle: invalid order-1 deformation");
  ConeCochain c;
  c.chi = def.mu_terms[0];
  c.F = AltMap::from_matrix(def.N_terms[0]);
  return c;
}

TruncatedDeformation cocycle_to_infinitesimal(const NijenhuisPair& pair, const AltMap& chi,
                                              const AltMap& F) {
  NijenhuisRep ad = adjoint_nijenhuis_rep(pair);
  if (!certify_2cocycle(pair, ad, chi, F).ok())
    throw std::invalid_argument("cocycle_to_infinitesimal: not a 2-cocycle");
  TruncatedDeformation def;
  def.base = pair;
  def.mu_terms = {chi};
  def.N_terms = {F.to_matrix()};
  return def;
}

CheckReport check_equivalence(const TruncatedDeformation& a, const TruncatedDeformation& b,
                              const TruncatedEquivalence& eq) {
  if (a.order() != b.order())
    throw std::invalid_argument("check_equivalence: orders differ");
  if (!(a.base.L == b.base.L) || !(a.base.N == b.base.N))
    throw std::invalid_argument("check_equivalence: deformations have different bases");
  const LieAlgebra& L = a.base.L;
  int d = L.dim, n = a.order();
  auto phi = [&](int i) -> Matrix {
    if (i == 0) return Matrix::identity(d);
    if (i <= static_cast<int>(eq.phi_terms.size())) return eq.phi_terms[static_cast<std::size_t>(i - 1)];
    return Matrix(d, d);
  };
  CheckReport out;
  for (int p = 1; p <= n; ++p) {
    for (int u = 0; u < d; ++u)
      for (int v = u + 1; v < d; ++v) {
        Vec x = unit_vec(d, u), y = unit_vec(d, v);
        Vec lhs = zero_vec(d), rhs = zero_vec(d);
        for (int i = 0; i <= p; ++i) {
          int j = p - i;
          add_to(lhs, phi(i).apply(mu_eval(a, j, x, y)));
        }
        for (int i = 0; i <= p; ++i)
          for (int j = 0; i + j <= p; ++j) {
            int k = p - i - j;
            add_to(rhs, mu_eval(b, i, phi(j).apply(x), phi(k).apply(y)));
          }
        out.add_nonzero("hom-order-" + std::to_string(p), {u, v}, sub(lhs, rhs));
      }
    Matrix lhs(d, d), rhs(d, d);
    for (int i = 0; i <= p; ++i) {
      int j = p - i;
      lhs = lhs + n_term(b, i) * phi(j);
      rhs = rhs + phi(i) * n_term(a, j);
    }
    out.add_nonzero("intertwine-order-" + std::to_string(p), {p}, (lhs - rhs).a);
  }
  return out;
}

std::optional<TruncatedEquivalence> equivalence_witness(const TruncatedDeformation& a,
                                                        const TruncatedDeformation& b) {
  if (a.order() != 1 || b.order() != 1)
    throw std::invalid_argument("equivalence_witness: order-1 deformations expected");
  if (!check_truncated(a).ok() || !check_truncated(b).ok())
    throw std::invalid_argument("equivalence_witness: invalid deformation");
  NijenhuisRep ad = adjoint_nijenhuis_rep(a.base);
  AltMap dchi = a.mu_terms[0] - b.mu_terms[0];
  AltMap dF = AltMap::from_matrix(a.N_terms[0] - b.N_terms[0]);
  auto phi = certify_2coboundary(a.base, ad, dchi, dF);
  if (!phi) return std::nullopt;
  return TruncatedEquivalence{{*phi}};
}

}  // namespace nijlie

#include "nijlie/alt_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace nijlie {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

int combo_rank(const std::vector<int>& t, int dim) {
  int n = static_cast<int>(t.size());
  int rank = 0, prev = -1;
  for (int i = 0; i < n; ++i) {
    for (int v = prev + 1; v < t[i]; ++v)
      rank += static_cast<int>(binom(dim - 1 - v, n - 1 - i));
    prev = t[i];
  }
  return rank;
}

std::vector<int> combo_unrank(int r, int n, int dim) {
  std::vector<int> t(static_cast<std::size_t>(n));
  int prev = -1;
  for (int i = 0; i < n; ++i) {
    int v = prev + 1;
    while (true) {
      int block = static_cast<int>(binom(dim - 1 - v, n - 1 - i));
      if (r < block) break;
      r -= block;
      ++v;
    }
    t[i] = v;
    prev = v;
  }
  return t;
}

std::vector<std::vector<int>> combos(int dim, int n) {
  std::vector<std::vector<int>> out;
  if (n < 0 || n > dim) return out;
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    int i = n - 1;
    while (i >= 0 && t[i] == dim - n + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < n; ++j) t[j] = t[j - 1] + 1;
  }
  if (n == 0) out = {{}};
  return out;
}

AltMap::AltMap(int n, int d, int m)
    : arity(n), dim(d), target_dim(m), c(static_cast<std::size_t>(binom(d, n)) * m) {}

Vec AltMap::coeff(int combo) const {
  Vec v(static_cast<std::size_t>(target_dim));
  for (int t = 0; t < target_dim; ++t) v[t] = coord(combo, t);
  return v;
}

void AltMap::set_coeff(const std::vector<int>& tuple, const Vec& v) {
  int r = combo_rank(tuple, dim);
  for (int t = 0; t < target_dim; ++t) coord(r, t) = v[t];
}

Vec AltMap::eval_indices(std::vector<int> idx) const {
  if (static_cast<int>(idx.size()) != arity)
    throw std::invalid_argument("eval_indices: arity mismatch");
  // insertion sort, tracking parity; repeated index -> 0
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    int v = idx[i];
    std::size_t j = i;
    while (j > 0 && idx[j - 1] > v) {
      idx[j] = idx[j - 1];
      sign = -sign;
      --j;
    }
    idx[j] = v;
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return zero_vec(target_dim);
  Vec v = coeff(combo_rank(idx, dim));
  if (sign < 0)
    for (auto& x : v) x = -x;
  return v;
}

Vec AltMap::eval(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != arity)
    throw std::invalid_argument("eval: arity mismatch");
  Vec out = zero_vec(target_dim);
  std::vector<int> idx(static_cast<std::size_t>(arity));
  std::function<void(int, const Rational&)> rec = [&](int slot, const Rational& coef) {
    if (slot == arity) {
      add_scaled(out, coef, eval_indices(idx));
      return;
    }
    const Vec& a = args[static_cast<std::size_t>(slot)];
    for (int i = 0; i < dim; ++i) {
      if (sgn(a[i]) == 0) continue;
      idx[static_cast<std::size_t>(slot)] = i;
      rec(slot + 1, Rational(coef * a[i]));
    }
  };
  rec(0, Rational(1));
  return out;
}

bool AltMap::is_zero() const {
  for (const auto& x : c)
    if (sgn(x) != 0) return false;
  return true;
}

AltMap AltMap::operator+(const AltMap& o) const {
  AltMap r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

AltMap AltMap::operator-(const AltMap& o) const {
  AltMap r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

AltMap AltMap::operator-() const {
  AltMap r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

AltMap AltMap::operator*(const Rational& s) const {
  AltMap r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

AltMap AltMap::from_matrix(const Matrix& M) {
  AltMap f(1, M.cols, M.rows);
  for (int j = 0; j < M.cols; ++j)
    for (int i = 0; i < M.rows; ++i) f.coord(j, i) = M.at(i, j);
  return f;
}

Matrix AltMap::to_matrix() const {
  if (arity != 1) throw std::invalid_argument("to_matrix: arity must be 1");
  Matrix M(target_dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < target_dim; ++i) M.at(i, j) = coord(j, i);
  return M;
}

AltMap AltMap::from_flat(int n, int d, int m, const Vec& flat) {
  AltMap f(n, d, m);
  if (flat.size() != f.c.size()) throw std::invalid_argument("from_flat: size mismatch");
  f.c = flat;
  return f;
}

Matrix altmap_map_matrix(int arity_in, int dim, int target_in,
                         const std::function<AltMap(const AltMap&)>& f) {
  AltMap unit(arity_in, dim, target_in);
  int n_in = unit.flat_dim();
  std::vector<Vec> cols;
  cols.reserve(static_cast<std::size_t>(n_in));
  for (int j = 0; j < n_in; ++j) {
    AltMap basis(arity_in, dim, target_in);
    basis.c[static_cast<std::size_t>(j)] = 1;
    cols.push_back(f(basis).flatten());
  }
  if (cols.empty()) {
    AltMap probe = f(unit);
    return Matrix(probe.flat_dim(), 0);
  }
  return Matrix::from_cols(cols);
}

std::vector<ShuffleBlock> shuffles(int m, int k) {
  std::vector<ShuffleBlock> out;
  int n = m + k;
  for (const auto& first : combos(n, m)) {
    ShuffleBlock s;
    s.first = first;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int p : first) used[static_cast<std::size_t>(p)] = true;
    for (int p = 0; p < n; ++p)
      if (!used[static_cast<std::size_t>(p)]) s.second.push_back(p);
    int inv = 0;
    for (std::size_t i = 0; i < s.first.size(); ++i) inv += s.first[i] - static_cast<int>(i);
    s.sign = (inv % 2 == 0) ? 1 : -1;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace nijlie

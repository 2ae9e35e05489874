#ifndef NIJLIE_ALT_MAP_HPP
#define NIJLIE_ALT_MAP_HPP

#include <functional>
#include <vector>

#include "nijlie/matrix.hpp"

namespace nijlie {

long long binom(int n, int k);

/// Lexicographic rank of a strictly increasing tuple from {0..dim-1}.
int combo_rank(const std::vector<int>& t, int dim);
std::vector<int> combo_unrank(int r, int n, int dim);
/// All strictly increasing n-tuples from {0..dim-1}, lexicographic.
std::vector<std::vector<int>> combos(int dim, int n);

/// Element of Hom(∧^n k^dim, k^target): coefficient table over sorted
/// index tuples, lexicographic, target coordinates fastest.  Arity 0 is a
/// single vector.
struct AltMap {
  int arity = 0;
  int dim = 0;
  int target_dim = 0;
  std::vector<Rational> c;  // size C(dim, arity) * target_dim

  AltMap() = default;
  AltMap(int n, int d, int m);

  int combo_count() const { return static_cast<int>(binom(dim, arity)); }
  int flat_dim() const { return combo_count() * target_dim; }

  Rational& coord(int combo, int t) { return c[static_cast<std::size_t>(combo) * target_dim + t]; }
  const Rational& coord(int combo, int t) const {
    return c[static_cast<std::size_t>(combo) * target_dim + t];
  }
  Vec coeff(int combo) const;
  void set_coeff(const std::vector<int>& tuple, const Vec& v);

  /// Value on basis vectors e_{idx[0]}, ..., e_{idx[n-1]} in the given
  /// order; repeated indices give zero, unsorted ones the sorting sign.
  Vec eval_indices(std::vector<int> idx) const;

  /// Full multilinear antisymmetric evaluation on coordinate vectors.
  Vec eval(const std::vector<Vec>& args) const;

  bool is_zero() const;
  AltMap operator+(const AltMap& o) const;
  AltMap operator-(const AltMap& o) const;
  AltMap operator-() const;
  AltMap operator*(const Rational& s) const;
  bool operator==(const AltMap& o) const = default;

  /// Square / rectangular matrix as an arity-1 map.
  static AltMap from_matrix(const Matrix& M);
  Matrix to_matrix() const;  // arity 1 only
  static AltMap from_flat(int n, int d, int m, const Vec& flat);
  const Vec& flatten() const { return c; }
};

/// Matrix of a linear map on AltMap spaces, columns indexed by the basis
/// of Hom(∧^{arity_in} k^dim, k^target_in) in flat coordinate order.
Matrix altmap_map_matrix(int arity_in, int dim, int target_in,
                         const std::function<AltMap(const AltMap&)>& f);

struct ShuffleBlock {
  std::vector<int> first;   // positions of the first block (increasing)
  std::vector<int> second;  // complement (increasing)
  int sign = 1;
};

/// All (m, k)-shuffles of positions {0..m+k-1} with signs.
std::vector<ShuffleBlock> shuffles(int m, int k);

}  // namespace nijlie

#endif

#ifndef NIJLIE_MATRIX_HPP
#define NIJLIE_MATRIX_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nijlie/rational.hpp"

namespace nijlie {

/// Dense exact-rational matrix, row major.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rs);
  static Matrix from_cols(const std::vector<Vec>& cs);
  /// Block-diagonal sum diag(A, B).
  static Matrix direct_sum(const Matrix& A, const Matrix& B);

  Rational& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  Vec apply(const Vec& x) const;  // matrix * vector
  Matrix transpose() const;
  Matrix pow(int k) const;  // square matrices, k >= 0
  bool is_zero() const;
  bool is_square() const { return rows == cols; }
  std::string str() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Rational& c) const;
  bool operator==(const Matrix& o) const = default;
};

/// Appends the columns of B to the right of A (row counts must match).
Matrix hstack(const Matrix& A, const Matrix& B);

/// Exact rank over the rationals (fraction-free Bareiss elimination).
int rank(const Matrix& M);

/// Columns form a basis of ker(M); column count = cols - rank(M).
Matrix kernel_basis(const Matrix& M);

/// Any exact solution of A x = b, or absent when the system is inconsistent.
std::optional<Vec> solve(const Matrix& A, const Vec& b);

/// Column-space membership test: b in span(columns of A)?
bool in_column_space(const Matrix& A, const Vec& b);

/// Picks columns of `candidates` that extend the column space of `space`.
/// Used to choose cohomology coset representatives (elimination order,
/// not canonical).
Matrix coset_representatives(const Matrix& candidates, const Matrix& space);

/// Matrix of a linear map given by its action on basis vectors.
Matrix matrix_of_map(int dim_in, int dim_out, const std::function<Vec(const Vec&)>& f);

}  // namespace nijlie

#endif

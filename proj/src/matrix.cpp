#include "nijlie/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace nijlie {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rs) {
  int r = static_cast<int>(rs.size());
  int c = r ? static_cast<int>(rs[0].size()) : 0;
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rs[i][j];
  return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cs) {
  int c = static_cast<int>(cs.size());
  int r = c ? static_cast<int>(cs[0].size()) : 0;
  Matrix m(r, c);
  for (int j = 0; j < c; ++j)
    for (int i = 0; i < r; ++i) m.at(i, j) = cs[j][i];
  return m;
}

Matrix Matrix::direct_sum(const Matrix& A, const Matrix& B) {
  Matrix m(A.rows + B.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) m.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < B.cols; ++j) m.at(A.rows + i, A.cols + j) = B.at(i, j);
  return m;
}

Vec Matrix::row(int i) const {
  Vec v(static_cast<std::size_t>(cols));
  for (int j = 0; j < cols; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(int j) const {
  Vec v(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols)
    throw std::invalid_argument("matrix apply: size mismatch");
  Vec y = zero_vec(rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (sgn(at(i, j)) != 0) y[i] += at(i, j) * x[j];
  return y;
}

Matrix Matrix::transpose() const {
  Matrix m(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::pow(int k) const {
  if (!is_square()) throw std::invalid_argument("pow of non-square matrix");
  Matrix r = identity(rows);
  for (int i = 0; i < k; ++i) r = r * (*this);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows; ++i) {
    os << "[ ";
    for (int j = 0; j < cols; ++j) os << rat_str(at(i, j)) << " ";
    os << "]\n";
  }
  return os.str();
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix product: size mismatch");
  Matrix m(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rational& v = at(i, k);
      if (sgn(v) == 0) continue;
      for (int j = 0; j < o.cols; ++j) m.at(i, j) += v * o.at(k, j);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix m = *this;
  for (std::size_t i = 0; i < a.size(); ++i) m.a[i] += o.a[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix m = *this;
  for (std::size_t i = 0; i < a.size(); ++i) m.a[i] -= o.a[i];
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.a) x = -x;
  return m;
}

Matrix Matrix::operator*(const Rational& c) const {
  Matrix m = *this;
  for (auto& x : m.a) x *= c;
  return m;
}

Matrix hstack(const Matrix& A, const Matrix& B) {
  if (A.rows == 0 && A.cols == 0) return B;
  if (B.rows == 0 && B.cols == 0) return A;
  if (A.rows != B.rows) throw std::invalid_argument("hstack: row mismatch");
  Matrix m(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) m.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols; ++j) m.at(i, A.cols + j) = B.at(i, j);
  }
  return m;
}

namespace {

// Fraction-free (Bareiss) echelon form over the integers.  Rows are first
// scaled by the lcm of their denominators, which changes neither rank,
// kernel nor solution sets of M x = 0 / M x = b (b scaled alongside).
struct Echelon {
  std::vector<std::vector<Integer>> w;  // echelon rows
  std::vector<int> pivot_cols;          // strictly increasing
  int cols = 0;
};

Echelon bareiss(const Matrix& M, const Vec* rhs) {
  int n = M.rows, m = M.cols;
  int width = m + (rhs ? 1 : 0);
  std::vector<std::vector<Integer>> w(n, std::vector<Integer>(width));
  for (int i = 0; i < n; ++i) {
    Integer lcm = 1;
    for (int j = 0; j < m; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), M.at(i, j).get_den().get_mpz_t());
    if (rhs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), (*rhs)[i].get_den().get_mpz_t());
    for (int j = 0; j < m; ++j) {
      Rational v = M.at(i, j) * lcm;
      w[i][j] = v.get_num();
    }
    if (rhs) {
      Rational v = (*rhs)[i] * lcm;
      w[i][m] = v.get_num();
    }
  }

  Echelon e;
  e.cols = m;
  Integer prev = 1;
  int r = 0;
  for (int col = 0; col < m && r < n; ++col) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (sgn(w[i][col]) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(w[r], w[piv]);
    for (int i = r + 1; i < n; ++i) {
      for (int j = col + 1; j < width; ++j) {
        Integer t = w[r][col] * w[i][j] - w[i][col] * w[r][j];
        if (mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()) == 0)
          throw std::logic_error("bareiss: inexact division");
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        w[i][j] = t;
      }
      w[i][col] = 0;
    }
    prev = w[r][col];
    e.pivot_cols.push_back(col);
    ++r;
  }
  w.resize(static_cast<std::size_t>(n));
  e.w = std::move(w);
  return e;
}

// Back-substitution over the rationals for one kernel / solution vector.
Vec back_substitute(const Echelon& e, const Vec& assigned, const Vec& rhs_row_values) {
  int m = e.cols;
  Vec x = assigned;  // free coordinates preset, pivots to fill
  int nr = static_cast<int>(e.pivot_cols.size());
  for (int i = nr - 1; i >= 0; --i) {
    int p = e.pivot_cols[i];
    Rational s = rhs_row_values[i];
    for (int j = p + 1; j < m; ++j)
      if (sgn(e.w[i][j]) != 0) s -= Rational(e.w[i][j]) * x[j];
    x[p] = s / Rational(e.w[i][p]);
  }
  return x;
}

}  // namespace

int rank(const Matrix& M) {
  if (M.rows == 0 || M.cols == 0) return 0;
  return static_cast<int>(bareiss(M, nullptr).pivot_cols.size());
}

Matrix kernel_basis(const Matrix& M) {
  int m = M.cols;
  if (m == 0) return Matrix(0, 0);
  if (M.rows == 0) return Matrix::identity(m);
  Echelon e = bareiss(M, nullptr);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m), false);
  for (int p : e.pivot_cols) is_pivot[p] = true;
  std::vector<Vec> cols;
  for (int f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    Vec assigned = zero_vec(m);
    assigned[f] = 1;
    Vec zero_rhs = zero_vec(static_cast<int>(e.pivot_cols.size()));
    cols.push_back(back_substitute(e, assigned, zero_rhs));
  }
  if (cols.empty()) return Matrix(m, 0);
  return Matrix::from_cols(cols);
}

std::optional<Vec> solve(const Matrix& A, const Vec& b) {
  if (static_cast<int>(b.size()) != A.rows)
    throw std::invalid_argument("solve: rhs length mismatch");
  if (A.cols == 0) {
    if (!is_zero(b)) return std::nullopt;
    return Vec{};
  }
  Echelon e = bareiss(A, &b);
  int nr = static_cast<int>(e.pivot_cols.size());
  for (int i = nr; i < A.rows; ++i)
    if (sgn(e.w[i][A.cols]) != 0) return std::nullopt;
  Vec assigned = zero_vec(A.cols);
  Vec rhs(static_cast<std::size_t>(nr));
  for (int i = 0; i < nr; ++i) rhs[i] = Rational(e.w[i][A.cols]);
  return back_substitute(e, assigned, rhs);
}

bool in_column_space(const Matrix& A, const Vec& b) { return solve(A, b).has_value(); }

Matrix coset_representatives(const Matrix& candidates, const Matrix& space) {
  Matrix span = space;
  std::vector<Vec> reps;
  int base_rank = rank(span);
  for (int j = 0; j < candidates.cols; ++j) {
    Matrix trial = hstack(span, Matrix::from_cols({candidates.col(j)}));
    int r = rank(trial);
    if (r > base_rank) {
      reps.push_back(candidates.col(j));
      span = trial;
      base_rank = r;
    }
  }
  if (reps.empty()) return Matrix(candidates.rows, 0);
  return Matrix::from_cols(reps);
}

Matrix matrix_of_map(int dim_in, int dim_out, const std::function<Vec(const Vec&)>& f) {
  Matrix m(dim_out, dim_in);
  for (int j = 0; j < dim_in; ++j) {
    Vec y = f(unit_vec(dim_in, j));
    for (int i = 0; i < dim_out; ++i) m.at(i, j) = y[i];
  }
  return m;
}

}  // namespace nijlie

#ifndef NIJLIE_TENSOR_HPP
#define NIJLIE_TENSOR_HPP

#include "nijlie/matrix.hpp"

namespace nijlie {

/// Element of g (x) g, dense d x d coefficient grid over e_i (x) e_j.
struct Tensor2 {
  int dim = 0;
  std::vector<Rational> t;

  Tensor2() = default;
  explicit Tensor2(int d) : dim(d), t(static_cast<std::size_t>(d) * d) {}

  Rational& at(int i, int j) { return t[static_cast<std::size_t>(i) * dim + j]; }
  const Rational& at(int i, int j) const { return t[static_cast<std::size_t>(i) * dim + j]; }

  Tensor2 flip() const;  // tau(x (x) y) = y (x) x
  Tensor2 apply_left(const Matrix& M) const;
  Tensor2 apply_right(const Matrix& M) const;
  bool is_zero() const;
  Vec flatten() const { return t; }

  Tensor2 operator+(const Tensor2& o) const;
  Tensor2 operator-(const Tensor2& o) const;
  Tensor2 operator-() const;
  bool operator==(const Tensor2& o) const = default;
};

/// Element of g (x) g (x) g, dense d^3 grid.
struct Tensor3 {
  int dim = 0;
  std::vector<Rational> t;

  Tensor3() = default;
  explicit Tensor3(int d) : dim(d), t(static_cast<std::size_t>(d) * d * d) {}

  Rational& at(int i, int j, int k) {
    return t[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }
  const Rational& at(int i, int j, int k) const {
    return t[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }

  Tensor3 apply_slot(const Matrix& M, int slot) const;  // slot in {0,1,2}
  /// cyclic rotation: sigma(x(x)y(x)z) = y(x)z(x)x
  Tensor3 rotate() const;
  bool is_zero() const;
  Vec flatten() const { return t; }

  Tensor3 operator+(const Tensor3& o) const;
  Tensor3 operator-(const Tensor3& o) const;
  bool operator==(const Tensor3& o) const = default;
};

}  // namespace nijlie

#endif

#include "nijlie/tensor.hpp"

#include <stdexcept>

namespace nijlie {

Tensor2 Tensor2::flip() const {
  Tensor2 r(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) r.at(j, i) = at(i, j);
  return r;
}

Tensor2 Tensor2::apply_left(const Matrix& M) const {
  Tensor2 r(dim);
  for (int i = 0; i < dim; ++i)
    for (int ip = 0; ip < dim; ++ip) {
      if (sgn(M.at(i, ip)) == 0) continue;
      for (int j = 0; j < dim; ++j) r.at(i, j) += M.at(i, ip) * at(ip, j);
    }
  return r;
}

Tensor2 Tensor2::apply_right(const Matrix& M) const {
  Tensor2 r(dim);
  for (int j = 0; j < dim; ++j)
    for (int jp = 0; jp < dim; ++jp) {
      if (sgn(M.at(j, jp)) == 0) continue;
      for (int i = 0; i < dim; ++i) r.at(i, j) += M.at(j, jp) * at(i, jp);
    }
  return r;
}

bool Tensor2::is_zero() const {
  for (const auto& x : t)
    if (sgn(x) != 0) return false;
  return true;
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
  Tensor2 r = *this;
  for (std::size_t i = 0; i < t.size(); ++i) r.t[i] += o.t[i];
  return r;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
  Tensor2 r = *this;
  for (std::size_t i = 0; i < t.size(); ++i) r.t[i] -= o.t[i];
  return r;
}

Tensor2 Tensor2::operator-() const {
  Tensor2 r = *this;
  for (auto& x : r.t) x = -x;
  return r;
}

Tensor3 Tensor3::apply_slot(const Matrix& M, int slot) const {
  if (slot < 0 || slot > 2) throw std::invalid_argument("apply_slot: slot out of range");
  Tensor3 r(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        const Rational& v = at(i, j, k);
        if (sgn(v) == 0) continue;
        for (int n = 0; n < dim; ++n) {
          int s = (slot == 0) ? i : (slot == 1) ? j : k;
          const Rational& m = M.at(n, s);
          if (sgn(m) == 0) continue;
          if (slot == 0)
            r.at(n, j, k) += m * v;
          else if (slot == 1)
            r.at(i, n, k) += m * v;
          else
            r.at(i, j, n) += m * v;
        }
      }
  return r;
}

Tensor3 Tensor3::rotate() const {
  Tensor3 r(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) r.at(j, k, i) += at(i, j, k);
  return r;
}

bool Tensor3::is_zero() const {
  for (const auto& x : t)
    if (sgn(x) != 0) return false;
  return true;
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
  Tensor3 r = *this;
  for (std::size_t i = 0; i < t.size(); ++i) r.t[i] += o.t[i];
  return r;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
  Tensor3 r = *this;
  for (std::size_t i = 0; i < t.size(); ++i) r.t[i] -= o.t[i];
  return r;
}

}  // namespace nijlie

#include "nijlie/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace nijlie {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // strict syntax: [-]digits[/digits]
  auto check_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!check_int(s)) throw std::invalid_argument("bad rational literal: " + s);
    return Rational(Integer(s));
  }
  std::string p = s.substr(0, slash), q = s.substr(slash + 1);
  if (!check_int(p) || !check_int(q))
    throw std::invalid_argument("bad rational literal: " + s);
  Integer den(q);
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator in: " + s);
  Rational r(Integer(p), den);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r) { return r.get_str(); }

Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n)); }

Vec unit_vec(int n, int i) {
  Vec v = zero_vec(n);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  add_to(r, b);
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec negate(const Vec& a) {
  Vec r = a;
  for (auto& x : r) x = -x;
  return r;
}

Vec scale(const Rational& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void add_to(Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

void add_scaled(Vec& a, const Rational& c, const Vec& b) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
}

Vec concat(const Vec& a, const Vec& b) {
  Vec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << rat_str(v[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace nijlie

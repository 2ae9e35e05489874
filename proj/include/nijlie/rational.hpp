#ifndef NIJLIE_RATIONAL_HPP
#define NIJLIE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace nijlie {

// Ground field: exact rationals. GMP keeps values canonical
// (gcd(num, den) = 1, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

/// Reduced rational from an integer pair; throws on zero denominator.
Rational rat(long num, long den = 1);

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

/// Renders as "p" or "p/q".
std::string rat_str(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// Coordinate vectors over the ground field.
using Vec = std::vector<Rational>;

Vec zero_vec(int n);
Vec unit_vec(int n, int i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec negate(const Vec& a);
Vec scale(const Rational& c, const Vec& v);
void add_to(Vec& a, const Vec& b);
void add_scaled(Vec& a, const Rational& c, const Vec& b);
Vec concat(const Vec& a, const Vec& b);
std::string vec_str(const Vec& v);

}  // namespace nijlie

#endif

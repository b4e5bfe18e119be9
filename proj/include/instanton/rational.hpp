#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace instanton {

// Exact rational numbers. mpq_class keeps num/den canonical (gcd 1, den > 0)
// after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q"; throws DomainError otherwise.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

// n/d in canonical form. The two-argument mpq_class constructor does not
// reduce, and comparisons on unreduced values are wrong.
inline Rational frac(const Integer& n, const Integer& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}
inline Rational frac(long n, long d) { return frac(Integer(n), Integer(d)); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Throws DomainError when the value does not fit.
std::int64_t to_int64(const Integer& z);
std::int64_t to_int64(const Rational& r);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace instanton

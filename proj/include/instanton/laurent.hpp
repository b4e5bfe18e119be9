#pragma once

#include <string>
#include <utility>
#include <vector>

#include "instanton/rational.hpp"

namespace instanton {

// Laurent polynomial in t with exponents in (1/2)Z, over Q.
//
// Internally a polynomial in s = t^(1/2): the term at index i carries
// s^(low + i). Coefficients are held as integers over one shared positive
// denominator, with gcd(content, den) = 1, so the representation of a value
// is unique. Half-integral t exponents occur in B1(t, u) and in the
// t -> 1 limits that subtract B1(1, t^2 q).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Rational& c);

  // c * t^e, e in (1/2)Z.
  static LaurentPoly monomial(const Rational& c, const Rational& t_exponent);
  static LaurentPoly half_monomial(const Rational& c, int half_exponent);
  // Builds from coefficients c[i] of s^(low + i).
  static LaurentPoly from_half_coeffs(int low, std::vector<Rational> c);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_monomial() const;
  bool is_constant() const;
  // True when every exponent of t is an integer.
  bool integral_exponents() const;

  // Lowest / highest exponent of s (= 2 * exponent of t). Zero polys: 0.
  int low_half() const { return low_; }
  int high_half() const { return low_ + static_cast<int>(c_.size()) - 1; }
  int term_count() const;

  Rational coeff_half(int half_exponent) const;
  Rational coeff(const Rational& t_exponent) const;
  Rational leading_coeff() const;
  const Integer& denominator() const { return den_; }
  const std::vector<Integer>& numerators() const { return c_; }

  Rational eval_at_one() const;
  // Multiplicity of s = 1 as a root (the reduced TRatFunc pole order counts
  // this one).
  int root_multiplicity_at_one() const;

  // Multiplication by t^(half/2).
  LaurentPoly shifted(int half) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& r);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& r) { return a *= r; }
  friend LaurentPoly operator*(const Rational& r, LaurentPoly a) { return a *= r; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.den_ == b.den_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Exact inverse of a monomial; throws NotInvertibleError otherwise.
  LaurentPoly monomial_inverse() const;

  // Multiplies in place by c * t^(half/2).
  void mul_monomial(const Rational& c, int half);

  // Division with remainder in Q[s] after both sides are read as plain
  // polynomials in s (low exponent stripped off the divisor only).
  // Requires divisor.low_half() == 0.
  std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& divisor) const;

  // Monic gcd in Q[s]; the result has low_half() == 0. Factors of s are
  // ignored (they are units of the Laurent ring).
  friend LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  // "3*t^2 - t + 1/2*t^(-1/2)" style.
  std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Integer> c_;
  Integer den_ = 1;
};

}  // namespace instanton

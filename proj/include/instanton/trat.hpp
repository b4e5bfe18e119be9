#pragma once

#include <string>

#include "instanton/laurent.hpp"
#include "instanton/rational.hpp"

namespace instanton {

// Reduced fraction of Laurent polynomials in t (exponents in (1/2)Z) over Q.
//
// Canonical form: the denominator is a polynomial in s = t^(1/2) with
// nonzero constant term and leading coefficient 1, every power of t lives
// in the numerator, and gcd(num, den) = 1. Equal values therefore have
// identical representations.
class TRatFunc {
 public:
  TRatFunc() = default;
  TRatFunc(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  explicit TRatFunc(const Rational& c) : num_(c) {}
  explicit TRatFunc(LaurentPoly p) : num_(std::move(p)) {}
  TRatFunc(const LaurentPoly& num, const LaurentPoly& den);

  static TRatFunc t_power(const Rational& e) { return TRatFunc(LaurentPoly::monomial(1, e)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  // Order of the pole at t = 1 (0 when regular).
  int pole_order_at_one() const;
  // Exact value at t = 1; PoleError carries the pole order.
  Rational eval_at_one() const;

  TRatFunc inverse() const;

  TRatFunc operator-() const;
  TRatFunc& operator+=(const TRatFunc& o);
  TRatFunc& operator-=(const TRatFunc& o) { return *this += -o; }
  TRatFunc& operator*=(const TRatFunc& o);
  TRatFunc& operator*=(const Rational& r);
  TRatFunc& operator/=(const TRatFunc& o) { return *this *= o.inverse(); }

  friend TRatFunc operator+(TRatFunc a, const TRatFunc& b) { return a += b; }
  friend TRatFunc operator-(TRatFunc a, const TRatFunc& b) { return a -= b; }
  friend TRatFunc operator*(TRatFunc a, const TRatFunc& b) { return a *= b; }
  friend TRatFunc operator*(TRatFunc a, const Rational& r) { return a *= r; }
  friend TRatFunc operator*(const Rational& r, TRatFunc a) { return a *= r; }
  friend TRatFunc operator/(TRatFunc a, const TRatFunc& b) { return a /= b; }
  friend bool operator==(const TRatFunc& a, const TRatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const TRatFunc& a, const TRatFunc& b) { return !(a == b); }

  // Multiplies by c * t^(half/2) without a gcd pass.
  void mul_monomial(const Rational& c, int half);

  std::string to_string() const;

 private:
  void reduce();

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

// (t - 1) and friends used by the generating-function prefactors.
// Free-function spelling of TRatFunc::eval_at_one.
inline Rational trat_eval_at_one(const TRatFunc& c) { return c.eval_at_one(); }

LaurentPoly t_minus(long c);  // t - c
LaurentPoly t_plus(long c);   // t + c

}  // namespace instanton

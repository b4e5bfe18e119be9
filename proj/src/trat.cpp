#include "instanton/trat.hpp"

#include "instanton/errors.hpp"

namespace instanton {

LaurentPoly t_minus(long c) { return LaurentPoly::half_monomial(1, 2) - LaurentPoly(c); }
LaurentPoly t_plus(long c) { return LaurentPoly::half_monomial(1, 2) + LaurentPoly(c); }

TRatFunc::TRatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw NotInvertibleError("TRatFunc with zero denominator");
  reduce();
}

void TRatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // powers of t are units: move them to the numerator
  const int h = den_.low_half();
  if (h != 0) {
    den_ = den_.shifted(-h);
    num_ = num_.shifted(-h);
  }
  if (den_.is_constant()) {
    num_ *= 1 / den_.leading_coeff();
    den_ = LaurentPoly(1);
    return;
  }
  LaurentPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    const int nl = num_.low_half();
    num_ = num_.shifted(-nl).divmod(g).first.shifted(nl);
    den_ = den_.divmod(g).first;
  }
  const Rational lead = den_.leading_coeff();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

int TRatFunc::pole_order_at_one() const {
  if (den_.is_one()) return 0;
  return den_.root_multiplicity_at_one();
}

Rational TRatFunc::eval_at_one() const {
  if (den_.is_one()) return num_.eval_at_one();
  Rational d = den_.eval_at_one();
  if (d == 0) {
    int order = pole_order_at_one();
    throw PoleError("pole of order " + std::to_string(order) + " at t = 1 in " + to_string(), order);
  }
  return num_.eval_at_one() / d;
}

TRatFunc TRatFunc::inverse() const {
  if (is_zero()) throw NotInvertibleError("inverse of zero TRatFunc");
  return TRatFunc(den_, num_);
}

TRatFunc TRatFunc::operator-() const {
  TRatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

TRatFunc& TRatFunc::operator+=(const TRatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) reduce();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

TRatFunc& TRatFunc::operator*=(const TRatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = TRatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

TRatFunc& TRatFunc::operator*=(const Rational& r) {
  num_ *= r;
  if (num_.is_zero()) den_ = LaurentPoly(1);
  return *this;
}

void TRatFunc::mul_monomial(const Rational& c, int half) {
  // den carries no factor of s, so gcd(num * s^k, den) stays 1
  num_.mul_monomial(c, half);
  if (num_.is_zero()) den_ = LaurentPoly(1);
}

std::string TRatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace instanton

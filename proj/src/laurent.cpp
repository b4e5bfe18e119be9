#include "instanton/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "instanton/errors.hpp"

namespace instanton {

namespace {

Rational half_to_exponent(int half) { return frac(half, 2); }

int exponent_to_half(const Rational& e) {
  Rational twice = e * 2;
  if (!is_integer(twice)) throw DomainError("t exponent " + to_string(e) + " is not in (1/2)Z");
  return static_cast<int>(to_int64(twice));
}

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) {
    c_.push_back(c.get_num());
    den_ = c.get_den();
  }
}

LaurentPoly LaurentPoly::monomial(const Rational& c, const Rational& t_exponent) {
  return half_monomial(c, exponent_to_half(t_exponent));
}

LaurentPoly LaurentPoly::half_monomial(const Rational& c, int half_exponent) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = half_exponent;
  return p;
}

LaurentPoly LaurentPoly::from_half_coeffs(int low, std::vector<Rational> c) {
  LaurentPoly p;
  p.low_ = low;
  Integer den = 1;
  for (const auto& x : c) den = lcm(den, x.get_den());
  p.c_.reserve(c.size());
  for (const auto& x : c) p.c_.push_back(x.get_num() * (den / x.get_den()));
  p.den_ = den;
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    low_ = 0;
    den_ = 1;
    return;
  }
  std::size_t last = c_.size();
  while (c_[last - 1] == 0) --last;
  if (first != 0 || last != c_.size()) {
    c_.erase(c_.begin() + static_cast<std::ptrdiff_t>(last), c_.end());
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : c_) x = -x;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  den_ /= g;
  for (auto& x : c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

bool LaurentPoly::is_one() const { return low_ == 0 && c_.size() == 1 && c_[0] == 1 && den_ == 1; }

bool LaurentPoly::is_monomial() const { return c_.size() == 1; }

bool LaurentPoly::is_constant() const { return is_zero() || (c_.size() == 1 && low_ == 0); }

bool LaurentPoly::integral_exponents() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0 && ((low_ + static_cast<int>(i)) % 2 != 0)) return false;
  return true;
}

int LaurentPoly::term_count() const {
  return static_cast<int>(std::count_if(c_.begin(), c_.end(), [](const Integer& x) { return x != 0; }));
}

Rational LaurentPoly::coeff_half(int half_exponent) const {
  int i = half_exponent - low_;
  if (is_zero() || i < 0 || i >= static_cast<int>(c_.size())) return 0;
  Rational r(c_[static_cast<std::size_t>(i)], den_);
  r.canonicalize();
  return r;
}

Rational LaurentPoly::coeff(const Rational& t_exponent) const {
  Rational twice = t_exponent * 2;
  if (!is_integer(twice)) return 0;
  return coeff_half(static_cast<int>(to_int64(twice)));
}

Rational LaurentPoly::leading_coeff() const {
  if (is_zero()) return 0;
  Rational r(c_.back(), den_);
  r.canonicalize();
  return r;
}

Rational LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& x : c_) s += x;
  Rational r(s, den_);
  r.canonicalize();
  return r;
}

int LaurentPoly::root_multiplicity_at_one() const {
  if (is_zero()) throw DomainError("root multiplicity of the zero polynomial");
  std::vector<Integer> p = c_;
  int mult = 0;
  while (p.size() > 1) {
    Integer s = 0;
    for (const auto& x : p) s += x;
    if (s != 0) break;
    // synthetic division by (s - 1), highest degree first
    std::vector<Integer> q(p.size() - 1);
    Integer carry = 0;
    for (std::size_t k = p.size() - 1; k >= 1; --k) {
      carry += p[k];
      q[k - 1] = carry;
    }
    p = std::move(q);
    ++mult;
  }
  return mult;
}

LaurentPoly LaurentPoly::shifted(int half) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += half;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high_half(), o.high_half());
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
  const bool same_den = den_ == o.den_;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    auto& slot = out[static_cast<std::size_t>(low_ - lo) + i];
    if (same_den)
      slot = c_[i];
    else
      slot = c_[i] * o.den_;
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    auto& slot = out[static_cast<std::size_t>(o.low_ - lo) + i];
    if (same_den)
      slot += o.c_[i];
    else
      mpz_addmul(slot.get_mpz_t(), o.c_[i].get_mpz_t(), den_.get_mpz_t());
  }
  c_ = std::move(out);
  low_ = lo;
  if (!same_den) den_ *= o.den_;
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.low_ = a.low_ + b.low_;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, Integer(0));
  std::vector<std::size_t> nz_b;
  nz_b.reserve(b.c_.size());
  for (std::size_t j = 0; j < b.c_.size(); ++j)
    if (b.c_[j] != 0) nz_b.push_back(j);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    const mpz_srcptr ai = a.c_[i].get_mpz_t();
    for (std::size_t j : nz_b) mpz_addmul(p.c_[i + j].get_mpz_t(), ai, b.c_[j].get_mpz_t());
  }
  p.den_ = a.den_ * b.den_;
  p.normalize();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& r) {
  if (r == 0) return *this = LaurentPoly();
  if (is_zero()) return *this;
  if (r.get_num() != 1)
    for (auto& x : c_) x *= r.get_num();
  den_ *= r.get_den();
  normalize();
  return *this;
}

void LaurentPoly::mul_monomial(const Rational& c, int half) {
  *this *= c;
  if (!is_zero()) low_ += half;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (!is_monomial()) throw NotInvertibleError("Laurent polynomial " + to_string() + " is not a unit");
  return half_monomial(1 / leading_coeff(), -low_);
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw NotInvertibleError("division by the zero polynomial");
  if (divisor.low_ != 0) throw DomainError("divmod: divisor must have a nonzero constant term");
  if (is_zero()) return {LaurentPoly(), LaurentPoly()};
  if (low_ < 0) throw DomainError("divmod: dividend must be a polynomial in s");
  const int db = divisor.high_half();
  // dividend as dense rational coefficients of s^0 .. s^high
  std::vector<Rational> r(static_cast<std::size_t>(high_half() + 1), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    r[static_cast<std::size_t>(low_) + i] = frac(c_[i], den_);
    r[static_cast<std::size_t>(low_) + i].canonicalize();
  }
  std::vector<Rational> b(static_cast<std::size_t>(db + 1));
  for (int j = 0; j <= db; ++j) b[static_cast<std::size_t>(j)] = divisor.coeff_half(j);
  const Rational lead_inv = 1 / b.back();
  const int da = static_cast<int>(r.size()) - 1;
  if (da < db) return {LaurentPoly(), *this};
  std::vector<Rational> q(static_cast<std::size_t>(da - db + 1), Rational(0));
  Rational tmp;
  for (int k = da - db; k >= 0; --k) {
    auto& rk = r[static_cast<std::size_t>(k + db)];
    if (rk == 0) continue;
    Rational qk = rk * lead_inv;
    for (int j = 0; j <= db; ++j) {
      if (b[static_cast<std::size_t>(j)] == 0) continue;
      tmp = qk * b[static_cast<std::size_t>(j)];
      r[static_cast<std::size_t>(k + j)] -= tmp;
    }
    q[static_cast<std::size_t>(k)] = std::move(qk);
  }
  r.resize(static_cast<std::size_t>(db));
  return {from_half_coeffs(0, std::move(q)), from_half_coeffs(0, std::move(r))};
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a.shifted(-a.low_half());
  LaurentPoly y = b.shifted(-b.low_half());
  if (x.is_zero() && y.is_zero()) return LaurentPoly();
  if (x.high_half() < y.high_half()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.high_half() == 0) {
      x = LaurentPoly(1);
      break;
    }
    auto r = x.divmod(y).second;
    x = std::move(y);
    y = r.shifted(-r.low_half());
  }
  if (x.is_zero()) return x;
  return x * (1 / x.leading_coeff());
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    Rational c = coeff_half(low_ + i);
    Rational e = half_to_exponent(low_ + i);
    bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << instanton::to_string(mag);
      continue;
    }
    if (mag != 1) os << instanton::to_string(mag) << "*";
    os << "t";
    if (e != 1) {
      if (is_integer(e) && e > 0)
        os << "^" << instanton::to_string(e);
      else
        os << "^(" << instanton::to_string(e) << ")";
    }
  }
  return os.str();
}

}  // namespace instanton

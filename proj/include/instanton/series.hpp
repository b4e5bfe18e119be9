#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "instanton/errors.hpp"
#include "instanton/laurent.hpp"
#include "instanton/rational.hpp"
#include "instanton/trat.hpp"

namespace instanton {

template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool is_zero(const Rational& c) { return c == 0; }
  static Rational inverse(const Rational& c) {
    if (c == 0) throw NotInvertibleError("zero is not invertible");
    return 1 / c;
  }
  static std::string to_string(const Rational& c) { return instanton::to_string(c); }
};

template <>
struct CoeffTraits<LaurentPoly> {
  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return LaurentPoly(1); }
  static bool is_zero(const LaurentPoly& c) { return c.is_zero(); }
  static LaurentPoly inverse(const LaurentPoly& c) { return c.monomial_inverse(); }
  static std::string to_string(const LaurentPoly& c) { return c.to_string(); }
};

template <>
struct CoeffTraits<TRatFunc> {
  static TRatFunc zero() { return {}; }
  static TRatFunc one() { return TRatFunc(1); }
  static bool is_zero(const TRatFunc& c) { return c.is_zero(); }
  static TRatFunc inverse(const TRatFunc& c) { return c.inverse(); }
  static std::string to_string(const TRatFunc& c) { return c.to_string(); }
};

template <class C>
concept CoefficientRing = requires(C a, const C& b, const Rational& r) {
  { CoeffTraits<C>::zero() } -> std::convertible_to<C>;
  { CoeffTraits<C>::is_zero(b) } -> std::convertible_to<bool>;
  { a += b };
  { a -= b };
  { b * b } -> std::convertible_to<C>;
  { b * r } -> std::convertible_to<C>;
};

// Truncated formal series sum_e c_e q^e with exponents e = k / denom.
//
// Only exponents e <= trunc are known. Coefficients above trunc are not
// zero, they are unknown, and asking for one is a TruncationError. Stored
// coefficients are always nonzero.
template <CoefficientRing C>
class Series {
 public:
  using coeff_type = C;
  using Traits = CoeffTraits<C>;

  Series() : Series(1, 0) {}
  Series(std::int64_t denom, Rational trunc) : denom_(denom), trunc_(std::move(trunc)) {
    if (denom_ <= 0) throw DomainError("series exponent denominator must be positive");
  }

  static Series one(const Rational& trunc, std::int64_t denom = 1) {
    return monomial(Traits::one(), 0, trunc, denom);
  }

  // c q^e + O(q^(>trunc)); e must lie on the 1/denom grid.
  static Series monomial(C c, const Rational& e, const Rational& trunc, std::int64_t denom = 1) {
    Series s(denom, trunc);
    s.add_term(e, std::move(c));
    return s;
  }

  std::int64_t denom() const { return denom_; }
  const Rational& trunc() const { return trunc_; }
  const std::map<std::int64_t, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational exponent_of(std::int64_t k) const { return frac(k, denom_); }

  // Largest numerator k with k / denom <= trunc.
  std::int64_t max_index() const { return to_int64(floor(trunc_ * denom_)); }

  std::optional<Rational> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return exponent_of(terms_.begin()->first);
  }

  // Coefficient of q^e; ring zero for absent terms within truncation.
  C coeff(const Rational& e) const {
    if (e > trunc_)
      throw TruncationError("coefficient at q^" + instanton::to_string(e) + " is beyond the truncation q^" + instanton::to_string(trunc_));
    Rational k = e * denom_;
    if (!is_integer(k)) return Traits::zero();
    auto it = terms_.find(to_int64(k));
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  // Adds c to the coefficient of q^e. Terms beyond trunc are dropped.
  void add_term(const Rational& e, C c) {
    Rational k = e * denom_;
    if (!is_integer(k))
      throw DomainError("exponent " + instanton::to_string(e) + " is not on the 1/" + std::to_string(denom_) + " grid");
    add_index(to_int64(k), std::move(c));
  }

  void add_index(std::int64_t k, C c) {
    if (Traits::is_zero(c) || frac(k, denom_) > trunc_) return;
    auto [it, inserted] = terms_.try_emplace(k, std::move(c));
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  // Same value on a finer grid; new_denom must be a multiple of denom.
  Series lifted(std::int64_t new_denom) const {
    if (new_denom == denom_) return *this;
    if (new_denom % denom_ != 0) throw DomainError("lifted: new denominator must be a multiple of the old one");
    const std::int64_t f = new_denom / denom_;
    Series s(new_denom, trunc_);
    for (const auto& [k, c] : terms_) s.terms_.emplace(k * f, c);
    return s;
  }

  // Forgets everything above n; n must not exceed trunc.
  Series truncated(const Rational& n) const {
    if (n > trunc_) throw TruncationError("cannot raise truncation from " + instanton::to_string(trunc_) + " to " + instanton::to_string(n));
    Series s(denom_, n);
    for (const auto& [k, c] : terms_)
      if (frac(k, denom_) <= n) s.terms_.emplace(k, c);
    return s;
  }

  Series operator-() const {
    Series s = *this;
    for (auto& [k, c] : s.terms_) c = Traits::zero() - c;
    return s;
  }

  Series& operator+=(const Series& o) { return *this = combine(*this, o, false); }
  Series& operator-=(const Series& o) { return *this = combine(*this, o, true); }
  Series& operator*=(const Series& o) { return *this = multiply(*this, o); }
  Series& operator*=(const Rational& r) {
    if (r == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c = c * r;
    return *this;
  }
  // Multiplies every coefficient by a ring element (no q dependence).
  Series& scale(const C& x) {
    if (Traits::is_zero(x)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second = it->second * x;
      if (Traits::is_zero(it->second))
        it = terms_.erase(it);
      else
        ++it;
    }
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b) { return multiply(a, b); }
  friend Series operator*(Series a, const Rational& r) { return a *= r; }
  friend Series operator*(const Rational& r, Series a) { return a *= r; }

  // Value equality: same truncation and same coefficients.
  friend bool operator==(const Series& a, const Series& b) {
    if (a.trunc_ != b.trunc_) return false;
    const std::int64_t d = std::lcm(a.denom_, b.denom_);
    return a.lifted(d).terms_ == b.lifted(d).terms_;
  }

  Series inverse() const {
    if (terms_.empty()) throw NotInvertibleError("inverse of a series with no known nonzero term");
    const auto& [k0, c0] = *terms_.begin();
    const C lead_inv = Traits::inverse(c0);
    const Rational v = exponent_of(k0);
    Series r(denom_, trunc_ - 2 * v);
    const std::int64_t top = r.max_index();
    // b_{-k0} = 1/c0;  b_m = -(1/c0) * sum_{j>0} a_{k0+j} b_{m-j}
    std::map<std::int64_t, C> b;
    b.emplace(-k0, lead_inv);
    for (std::int64_t m = -k0 + 1; m <= top; ++m) {
      C acc = Traits::zero();
      bool any = false;
      for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        const std::int64_t j = it->first - k0;
        if (m - j < -k0) break;
        auto bt = b.find(m - j);
        if (bt == b.end()) continue;
        acc += it->second * bt->second;
        any = true;
      }
      if (!any || Traits::is_zero(acc)) continue;
      C val = Traits::zero() - acc * lead_inv;
      if (!Traits::is_zero(val)) b.emplace(m, std::move(val));
    }
    r.terms_ = std::move(b);
    return r;
  }

  Series pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    Series result = one(trunc_, denom_);
    Series base = *this;
    bool first = true;
    while (n > 0) {
      if (n & 1) {
        result = first ? base : result * base;
        first = false;
      }
      n >>= 1;
      if (n > 0) base = base * base;
    }
    return result;
  }

  // Substitution q -> q^k for rational k > 0. The exponent grid stays 1/denom
  // when every dilated exponent lands on it, otherwise becomes
  // 1/(denom * den(k)).
  Series dilate(const Rational& k) const {
    if (k <= 0) throw DomainError("dilation factor must be positive");
    const std::int64_t p = to_int64(Integer(k.get_num()));
    const std::int64_t q = to_int64(Integer(k.get_den()));
    bool stays = true;
    for (const auto& [idx, c] : terms_)
      if ((idx * p) % q != 0) {
        stays = false;
        break;
      }
    Series s(stays ? denom_ : denom_ * q, trunc_ * k);
    for (const auto& [idx, c] : terms_) s.terms_.emplace(stays ? idx * p / q : idx * p, c);
    return s;
  }

  // tau -> tau + 1/2: multiplies the coefficient of q^e by (-1)^e. Defined
  // only for series whose exponents are all integers.
  Series half_period_shift() const {
    Series s = *this;
    for (auto& [k, c] : s.terms_) {
      if (k % denom_ != 0)
        throw DomainError("half-period shift needs integer exponents; found q^" + instanton::to_string(exponent_of(k)));
      if (((k / denom_) % 2) != 0) c = Traits::zero() - c;
    }
    return s;
  }

  // Multiplication by q^e (exact: truncation moves with it).
  Series shifted(const Rational& e) const {
    Rational k = e * denom_;
    if (!is_integer(k)) throw DomainError("shift exponent not on the series grid");
    const std::int64_t d = to_int64(k);
    Series s(denom_, trunc_ + e);
    for (const auto& [idx, c] : terms_) s.terms_.emplace(idx + d, c);
    return s;
  }

  // Multiplies by (1 - m q^a)^p, a > 0, by the two-term recurrence.
  Series& mul_binomial_power(const C& m, const Rational& a, long p) {
    if (Traits::is_zero(m) || p == 0) return *this;
    Rational ka = a * denom_;
    if (a <= 0 || !is_integer(ka)) throw DomainError("binomial factor exponent must be positive and on the grid");
    const std::int64_t step = to_int64(ka);
    const std::int64_t top = max_index();
    for (long rep = 0; rep < (p < 0 ? -p : p); ++rep) {
      if (terms_.empty()) return *this;
      if (p > 0) {
        // b_e = a_e - m a_{e-a}, read from the old terms
        std::map<std::int64_t, C> old = terms_;
        for (const auto& [k, c] : old)
          if (k + step <= top) add_index(k + step, Traits::zero() - m * c);
      } else {
        // b_e = a_e + m b_{e-a}, increasing e
        const std::int64_t lo = terms_.begin()->first;
        for (std::int64_t k = lo + step; k <= top; ++k) {
          auto prev = terms_.find(k - step);
          if (prev == terms_.end()) continue;
          add_index(k, m * prev->second);
        }
      }
    }
    return *this;
  }

  template <class F>
  auto map_coeffs(F f) const -> Series<std::decay_t<decltype(f(std::declval<const C&>()))>> {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    Series<D> s(denom_, trunc_);
    for (const auto& [k, c] : terms_) s.add_index(k, f(c));
    return s;
  }

  std::string to_string(int max_terms = 12) const {
    std::ostringstream os;
    int n = 0;
    for (const auto& [k, c] : terms_) {
      if (n++ == max_terms) {
        os << " + ...";
        break;
      }
      if (n > 1) os << " + ";
      std::string cs = Traits::to_string(c);
      Rational e = exponent_of(k);
      if (e == 0) {
        os << cs;
        continue;
      }
      os << "(" << cs << ")*q";
      if (e != 1) os << "^(" << instanton::to_string(e) << ")";
    }
    if (n > 0) os << " + ";
    os << "O(q^>" << instanton::to_string(trunc_) << ")";
    return os.str();
  }

 private:
  static Series combine(const Series& a, const Series& b, bool subtract) {
    const std::int64_t d = std::lcm(a.denom_, b.denom_);
    Series s = a.lifted(d).truncated(std::min(a.trunc_, b.trunc_));
    const Series bl = b.lifted(d);
    for (const auto& [k, c] : bl.terms_) s.add_index(k, subtract ? Traits::zero() - c : c);
    return s;
  }

  static Series multiply(const Series& a0, const Series& b0) {
    const std::int64_t d = std::lcm(a0.denom_, b0.denom_);
    const Series a = a0.lifted(d);
    const Series b = b0.lifted(d);
    // known range: min(Na + vb, Nb + va), never beyond min(Na, Nb)
    const Rational va = a.terms_.empty() ? a.trunc_ : a.exponent_of(a.terms_.begin()->first);
    const Rational vb = b.terms_.empty() ? b.trunc_ : b.exponent_of(b.terms_.begin()->first);
    Rational t = std::min(a.trunc_ + vb, b.trunc_ + va);
    t = std::min({t, a.trunc_, b.trunc_});
    Series s(d, t);
    const std::int64_t top = s.max_index();
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) {
        if (ka + kb > top) break;
        s.add_index(ka + kb, ca * cb);
      }
    }
    return s;
  }

  std::int64_t denom_;
  Rational trunc_;
  std::map<std::int64_t, C> terms_;
};

using QSeries = Series<Rational>;
using PolySeries = Series<LaurentPoly>;
using TSeries = Series<TRatFunc>;

// Named entry points matching the documented operations.
template <class C>
Series<C> series_mul(const Series<C>& a, const Series<C>& b) {
  return a * b;
}
template <class C>
Series<C> series_inverse(const Series<C>& a) {
  return a.inverse();
}
template <class C>
Series<C> series_dilate(const Series<C>& a, const Rational& k) {
  return a.dilate(k);
}
template <class C>
Series<C> series_half_period_shift(const Series<C>& a) {
  return a.half_period_shift();
}
template <class C>
C coeff_extract(const Series<C>& a, const Rational& e) {
  return a.coeff(e);
}

// Polynomial series with t-coefficients: coefficient of q^e multiplied by
// t^(alpha * e). Realizes u -> t^alpha q for series in u.
PolySeries twist_by_t_power(const PolySeries& s, const Rational& alpha);
TSeries twist_by_t_power(const TSeries& s, const Rational& alpha);

// Embeddings between the coefficient rings.
PolySeries to_poly_series(const QSeries& s);
TSeries to_tseries(const PolySeries& s);
TSeries to_tseries(const QSeries& s);
// Divides every coefficient by a fixed Laurent polynomial.
TSeries divide_by(const PolySeries& s, const LaurentPoly& den);
// Coefficientwise t -> 1; PoleError when some coefficient has a pole.
QSeries eval_at_one(const TSeries& s);
QSeries eval_at_one(const PolySeries& s);

}  // namespace instanton

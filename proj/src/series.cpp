#include "instanton/series.hpp"

namespace instanton {

namespace {

int twist_half(const Rational& alpha, std::int64_t k, std::int64_t denom) {
  Rational half = 2 * alpha * frac(k, denom);
  if (!is_integer(half))
    throw DomainError("t-twist by " + to_string(alpha) + " leaves (1/2)Z at q^" + to_string(frac(k, denom)));
  return static_cast<int>(to_int64(half));
}

}  // namespace

PolySeries twist_by_t_power(const PolySeries& s, const Rational& alpha) {
  PolySeries out(s.denom(), s.trunc());
  for (const auto& [k, c] : s.terms()) out.add_index(k, c.shifted(twist_half(alpha, k, s.denom())));
  return out;
}

TSeries twist_by_t_power(const TSeries& s, const Rational& alpha) {
  TSeries out(s.denom(), s.trunc());
  for (const auto& [k, c] : s.terms()) {
    TRatFunc x = c;
    x.mul_monomial(1, twist_half(alpha, k, s.denom()));
    out.add_index(k, std::move(x));
  }
  return out;
}

PolySeries to_poly_series(const QSeries& s) {
  return s.map_coeffs([](const Rational& c) { return LaurentPoly(c); });
}

TSeries to_tseries(const PolySeries& s) {
  return s.map_coeffs([](const LaurentPoly& c) { return TRatFunc(c); });
}

TSeries to_tseries(const QSeries& s) {
  return s.map_coeffs([](const Rational& c) { return TRatFunc(c); });
}

TSeries divide_by(const PolySeries& s, const LaurentPoly& den) {
  return s.map_coeffs([&](const LaurentPoly& c) { return TRatFunc(c, den); });
}

QSeries eval_at_one(const TSeries& s) {
  return s.map_coeffs([](const TRatFunc& c) { return c.eval_at_one(); });
}

QSeries eval_at_one(const PolySeries& s) {
  return s.map_coeffs([](const LaurentPoly& c) { return c.eval_at_one(); });
}

}  // namespace instanton

#include <doctest.h>

#include "generators.hpp"
#include "instanton/forms.hpp"
#include "instanton/series.hpp"
#include "instanton/trat.hpp"
#include "oracles.hpp"

using namespace instanton;

namespace {

QSeries poly(std::initializer_list<long> c, const Rational& trunc) {
  QSeries s(1, trunc);
  long e = 0;
  for (long x : c) s.add_term(e++, x);
  return s;
}

LaurentPoly t_poly(std::initializer_list<long> c) {  // c[i] t^i
  LaurentPoly p;
  int i = 0;
  for (long x : c) p += LaurentPoly::monomial(Rational(x), i++);
  return p;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("parse and print canonical fractions") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-7")) == "-7");
    CHECK(to_string(frac(4, -6)) == "-2/3");
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("x"), DomainError);
    CHECK(floor(frac(-1, 2)) == -1);
    CHECK(ceil(frac(-1, 2)) == 0);
  }
}

TEST_SUITE("laurent") {
  TEST_CASE("half-integral exponents") {
    LaurentPoly p = LaurentPoly::monomial(1, frac(1, 2)) + LaurentPoly::monomial(1, frac(-1, 2));
    CHECK(p.low_half() == -1);
    CHECK(p.high_half() == 1);
    CHECK_FALSE(p.integral_exponents());
    CHECK((p * p).to_string() == (LaurentPoly::monomial(1, 1) + LaurentPoly(2) + LaurentPoly::monomial(1, -1)).to_string());
    CHECK(p.eval_at_one() == 2);
  }

  TEST_CASE("divmod reconstructs the dividend") {
    gen::Gen g(11);
    for (int i = 0; i < 200; ++i) {
      LaurentPoly a = g.laurent(5, 8);
      a = a.shifted(-a.low_half());
      LaurentPoly d = g.nonzero_laurent(3, 4);
      d = d.shifted(-d.low_half());
      auto [q, r] = a.divmod(d);
      CHECK(q * d + r == a);
      CHECK((r.is_zero() || r.high_half() - r.low_half() < d.high_half()));
    }
  }

  TEST_CASE("gcd divides both arguments") {
    gen::Gen g(12);
    for (int i = 0; i < 100; ++i) {
      LaurentPoly common = g.nonzero_laurent(2, 2);
      common = common.shifted(-common.low_half());
      LaurentPoly a = g.nonzero_laurent(3, 4) * common, b = g.nonzero_laurent(3, 4) * common;
      LaurentPoly h = gcd(a, b);
      LaurentPoly as = a.shifted(-a.low_half()), bs = b.shifted(-b.low_half());
      CHECK(as.divmod(h).second.is_zero());
      CHECK(bs.divmod(h).second.is_zero());
      CHECK(h.high_half() >= common.high_half() - common.low_half());
    }
  }
}

TEST_SUITE("trat") {
  TEST_CASE("removable singularities and poles at t = 1") {
    CHECK(TRatFunc(t_poly({-1, 0, 1}), t_minus(1)).eval_at_one() == 2);
    CHECK(trat_eval_at_one(TRatFunc(t_poly({2, -3, 0, 1}), t_minus(1) * t_minus(1))) == 3);
    TRatFunc p(LaurentPoly(1), t_minus(1));
    CHECK(p.pole_order_at_one() == 1);
    try {
      (void)p.eval_at_one();
      FAIL("expected a pole");
    } catch (const PoleError& e) {
      CHECK(e.order() == 1);
    }
  }

  TEST_CASE("canonical form is unique") {
    // (t^2 - 1)/(t - 1) and (t + 1) are the same value with the same representation
    TRatFunc a(t_poly({-1, 0, 1}), t_minus(1));
    CHECK(a == TRatFunc(t_plus(1)));
    CHECK(a.is_polynomial());
    // t powers live in the numerator
    TRatFunc b(LaurentPoly(1), LaurentPoly::monomial(1, 2) * t_minus(2));
    CHECK(b.den().low_half() == 0);
    CHECK(b.den().coeff_half(0) != 0);
  }

  TEST_CASE("field axioms on random fractions") {
    gen::Gen g(21);
    for (int i = 0; i < 150; ++i) {
      TRatFunc x = g.trat(), y = g.trat(), z = g.trat();
      CHECK((x + y) + z == x + (y + z));
      CHECK(x * y == y * x);
      CHECK(x * (y + z) == x * y + x * z);
      if (!y.is_zero()) {
        CHECK((x * y) / y == x);
        CHECK(y * y.inverse() == TRatFunc(1));
      }
    }
  }

  TEST_CASE("evaluation at one is a ring map where defined") {
    gen::Gen g(22);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
      TRatFunc x = g.trat(), y = g.trat();
      if (x.pole_order_at_one() || y.pole_order_at_one()) continue;
      CHECK((x * y).eval_at_one() == x.eval_at_one() * y.eval_at_one());
      CHECK((x + y).eval_at_one() == x.eval_at_one() + y.eval_at_one());
      ++checked;
    }
    CHECK(checked > 50);
  }
}

template <class A, class B>
concept Multipliable = requires(A a, B b) { a * b; };
template <class A, class B>
concept Addable = requires(A a, B b) { a + b; };

TEST_SUITE("series") {
  TEST_CASE("multiplication and truncation") {
    CHECK(poly({1, 1}, 4) * poly({1, -1}, 4) == poly({1, 0, -1}, 4));
    QSeries th = gen_form(FormName::theta3, 1, 5);
    CHECK((th * th).coeff(frac(1, 2)) == 4);
    QSeries a = poly({1, 2, 3}, 3), b = poly({1, 1}, 7);
    CHECK((a * b).trunc() == 3);
    // q^2 a has its known range moved up by 2: min(3 + 0, 7 + 2) -> 3 still caps
    CHECK((a.shifted(2) * b).trunc() == 5);
  }

  TEST_CASE("inverse") {
    QSeries geo = poly({1, -1}, 6).inverse();
    for (int n = 0; n <= 6; ++n) CHECK(geo.coeff(n) == 1);

    QSeries eta24 = gen_form(FormName::eta, 1, 8).pow(24);
    QSeries inv = eta24.inverse();
    CHECK(inv.valuation() == Rational(-1));
    CHECK(inv.coeff(-1) == 1);
    CHECK(inv.coeff(0) == 24);

    QSeries m = poly({0, 0, 1, 1}, 8).inverse();
    CHECK(m.valuation() == Rational(-2));
    for (int n = 0; n <= 4; ++n) CHECK(m.coeff(n - 2) == (n % 2 ? -1 : 1));
    CHECK_THROWS_AS(QSeries(1, 5).inverse(), NotInvertibleError);
  }

  TEST_CASE("dilation and half-period shift") {
    QSeries e2 = gen_form(FormName::E2, 1, 4);
    QSeries d = e2.dilate(2);
    CHECK(d.coeff(2) == -24);
    CHECK(d.coeff(4) == -72);
    CHECK(d.coeff(1) == 0);
    QSeries th = gen_form(FormName::theta3, 1, 4).dilate(frac(1, 2));
    CHECK(th.coeff(frac(1, 4)) == 2);
    CHECK(th.valuation() == Rational(0));
    CHECK(e2.dilate(2).dilate(frac(1, 2)) == e2);

    QSeries e4 = gen_form(FormName::E4, 1, 3).half_period_shift();
    CHECK(e4.coeff(1) == -240);
    CHECK(e4.coeff(2) == 2160);
    CHECK(e4.half_period_shift() == gen_form(FormName::E4, 1, 3));
    CHECK_THROWS_AS(gen_form(FormName::theta3, 1, 2).half_period_shift(), DomainError);
  }

  TEST_CASE("P weights from E4 by the even/odd split") {
    QSeries e4 = gen_form(FormName::E4, 1, 8);
    QSeries peven = (e4.dilate(frac(1, 2)) + e4.half_period_shift().dilate(frac(1, 2))) * frac(1, 2) - e4.dilate(2);
    CHECK(peven.coeff(1) == 240 * oracle::sigma(3, 2));  // 2160
    CHECK(peven.coeff(1) == 2160);
    CHECK(peven.coeff(0) == 0);
    CHECK(peven.truncated(4) == gen_form(FormName::Peven, 1, 4));
  }

  TEST_CASE("coefficient extraction contract") {
    CHECK(coeff_extract(gen_form(FormName::eta, 1, 5).pow(24), Rational(3)) == 252);
    CHECK(poly({1, -1}, 10).coeff(5) == 0);
    QSeries a = poly({1, 2, 3}, 3);
    CHECK_THROWS_AS(a.coeff(4), TruncationError);
    CHECK_THROWS_AS(a.truncated(5), TruncationError);
    // off-grid exponents are zero, not errors
    CHECK(a.coeff(frac(1, 3)) == 0);
  }

  TEST_CASE("coefficient rings do not mix") {
    // the ring is a template parameter; a product across rings has no overload
    CHECK_FALSE(Multipliable<QSeries, TSeries>);
    CHECK_FALSE(Addable<QSeries, PolySeries>);
    CHECK(Multipliable<QSeries, QSeries>);
  }

  TEST_CASE("eta^24 against the brute-force product") {
    const std::size_t n = 15;
    auto ref = oracle::euler_product(24, n);
    QSeries eta24 = gen_form(FormName::eta, 1, static_cast<long>(n) + 1).pow(24);
    for (std::size_t k = 0; k <= n; ++k) CHECK(eta24.coeff(static_cast<long>(k) + 1) == Rational(ref[k]));
    // frozen from the oracle
    const long frozen[] = {1, -24, 252, -1472, 4830, -6048, -16744, 84480};
    for (std::size_t k = 0; k < 8; ++k) CHECK(ref[k] == frozen[k]);
  }
}

TEST_SUITE("series properties") {
  TEST_CASE("ring axioms up to the common truncation") {
    gen::Gen g(31);
    for (int i = 0; i < 200; ++i) {
      const std::int64_t denom = g.coin() ? 1 : 2;
      QSeries a = g.qseries(g.range(2, 8), denom), b = g.qseries(g.range(2, 8), 1), c = g.qseries(g.range(2, 8), denom);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      QSeries l = a * (b + c), r = a * b + a * c;
      Rational t = std::min(l.trunc(), r.trunc());
      CHECK(l.truncated(t) == r.truncated(t));
      CHECK((a * b).trunc() <= std::min(a.trunc(), b.trunc()));
    }
  }

  TEST_CASE("multiplying by the inverse gives one") {
    gen::Gen g(32);
    for (int i = 0; i < 200; ++i) {
      Rational v = frac(g.range(-3, 3), 2);
      QSeries a = g.qseries(v + g.range(1, 8), 2, v, true);
      QSeries inv = a.inverse();
      CHECK(*inv.valuation() == -v);
      CHECK(a * inv == QSeries::one(std::min(a.trunc(), inv.trunc()), 2));
    }
  }

  TEST_CASE("dilation and shifts are ring maps") {
    gen::Gen g(33);
    for (int i = 0; i < 150; ++i) {
      QSeries a = g.qseries(6), b = g.qseries(6);
      Rational k = frac(g.range(1, 4), g.range(1, 3));
      CHECK((a * b).dilate(k) == a.dilate(k) * b.dilate(k));
      CHECK(a.dilate(k).dilate(1 / k) == a);
      CHECK((a * b).half_period_shift() == a.half_period_shift() * b.half_period_shift());
      CHECK(a.half_period_shift().half_period_shift() == a);
    }
  }

  TEST_CASE("binomial powers agree with repeated multiplication") {
    gen::Gen g(34);
    for (int i = 0; i < 100; ++i) {
      QSeries a = g.qseries(8);
      const long p = g.range(-3, 3);
      const long e = g.range(1, 3);
      QSeries f = QSeries::one(8);
      f.add_term(e, -1);
      QSeries viaprod = a * f.pow(p);
      QSeries direct = a;
      direct.mul_binomial_power(Rational(1), e, p);
      CHECK(direct == viaprod.truncated(direct.trunc()));
    }
  }

  TEST_CASE("truncation forgets only the top") {
    gen::Gen g(35);
    for (int i = 0; i < 100; ++i) {
      QSeries a = g.qseries(10, 4);
      Rational n = frac(g.range(0, 40), 4);
      QSeries b = a.truncated(n);
      for (const auto& [k, c] : b.terms()) CHECK(a.coeff(b.exponent_of(k)) == c);
      CHECK(b.trunc() == n);
    }
  }
}

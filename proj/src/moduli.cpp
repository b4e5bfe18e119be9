#include "instanton/moduli.hpp"

#include <chrono>
#include <map>
#include <mutex>

#include "instanton/errors.hpp"

namespace instanton {

namespace {

// Thread-safe memo for the building blocks shared by several assemblies.
template <class Key, class Value>
class Memo {
 public:
  template <class Make>
  Value get(const Key& key, Make&& make) {
    {
      std::lock_guard lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Value v = make();
    std::lock_guard lock(mutex_);
    return map_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<Key, Value> map_;
};

LaurentPoly tpow(long e) { return LaurentPoly::monomial(1, Rational(e)); }

const std::vector<int>& betti(SurfaceKind s) {
  static const SurfaceData data;
  return s == SurfaceKind::X ? data.betti_X : data.betti_Sigma1;
}

// (t^k - t^-k)/(t - 1) = t^-k (1 + t + ... + t^(2k-1))
LaurentPoly sym_quotient(long k) {
  LaurentPoly p;
  for (long i = -k; i < k; ++i) p += tpow(i);
  return p;
}

std::int64_t top_int(const Rational& r) { return to_int64(floor(r)); }

// 2(t^2-1)(t-1) etc, as Laurent polynomials
LaurentPoly t_minus_1() { return tpow(1) - LaurentPoly(1); }
LaurentPoly t2_minus_1() { return tpow(2) - LaurentPoly(1); }

struct ThetaShifts {
  ShiftVector r0, r1;            // the two pole terms
  std::array<ShiftVector, 4> s;  // paired with A_1..A_4
};

// With h = l/2: r0 = s1 = h, r1 = s3 = q + h, s2 = p + h, s4 = p + q + h.
ThetaShifts shifts_for(const C1Class& c1) {
  const ShiftVector h = c1.half_shift();
  const ShiftVector p = d8_shift(false, true, false), q = d8_shift(false, false, true);
  ThetaShifts t;
  t.r0 = h;
  t.r1 = q + h;
  t.s = {h, p + h, q + h, p + q + h};
  return t;
}

PolySeries times(const PolySeries& s, const LaurentPoly& c) {
  PolySeries r = s;
  r.scale(c);
  return r;
}

}  // namespace

PolySeries zeta_factor(SurfaceKind surface, int u_t_power, int u_q_power, const Rational& trunc) {
  if (u_q_power < 1) throw DomainError("zeta factor substitution needs a positive q power");
  PolySeries s = PolySeries::one(trunc, 4);
  const auto& b = betti(surface);
  for (std::size_t i = 0; 2 * i < b.size(); ++i)
    if (b[2 * i] != 0) s.mul_binomial_power(tpow(static_cast<long>(i) + u_t_power), Rational(u_q_power), -b[2 * i]);
  return s;
}

PolySeries zeta_product(SurfaceKind surface, int alpha, int beta, int power, const Rational& trunc) {
  PolySeries s = PolySeries::one(trunc, 4);
  const auto& b = betti(surface);
  for (std::int64_t a = 1; a <= top_int(trunc); ++a)
    for (std::size_t i = 0; 2 * i < b.size(); ++i)
      if (b[2 * i] != 0)
        s.mul_binomial_power(tpow(static_cast<long>(i) + alpha * a + beta), Rational(a), -b[2 * i] * power);
  return s;
}

PolySeries zeta_x_squared(const Rational& trunc) {
  static Memo<Rational, PolySeries> memo;
  return memo.get(trunc, [&] { return zeta_product(SurfaceKind::X, 2, -1, 2, trunc); });
}

PolySeries vacuum_numerator(VacuumKind kind, const Rational& trunc) {
  static Memo<std::pair<int, Rational>, PolySeries> memo;
  return memo.get({static_cast<int>(kind), trunc}, [&] {
    PolySeries prod = zeta_product(SurfaceKind::Sigma1, 2, -2, 1, trunc) * zeta_product(SurfaceKind::Sigma1, 2, 0, 1, trunc);
    if (kind == VacuumKind::F) return prod;
    return prod - zeta_product(SurfaceKind::Sigma1, 2, -1, 2, trunc);
  });
}

TSeries vacuum_series(VacuumKind kind, const Rational& trunc) {
  return divide_by(vacuum_numerator(kind, trunc), t2_minus_1() * t_minus_1());
}

PolySeries a_sum(int i, const Rational& trunc) {
  if (i < 1 || i > 4) throw DomainError("A-sum index must be 1..4");
  PolySeries s(4, trunc);
  const std::int64_t top = top_int(trunc);
  for (std::int64_t m = 1; m <= top; ++m)
    for (std::int64_t n = 1;; ++n) {
      std::int64_t e = 0, k = 0;
      switch (i) {
        case 1:
          e = 4 * m * n, k = 2 * m;
          break;
        case 2:
          e = 2 * m * (2 * n - 1), k = 2 * m;
          break;
        case 3:
          e = (2 * m - 1) * 2 * n, k = 2 * m - 1;
          break;
        default:
          e = (2 * m - 1) * (2 * n - 1), k = 2 * m - 1;
      }
      if (e > top) break;
      LaurentPoly c = sym_quotient(k);
      c.mul_monomial(1, static_cast<int>(4 * e));  // (t^2 q)^e
      s.add_term(Rational(e), std::move(c));
    }
  return s;
}

PolySeries substitute_u(const PolySeries& in_u) { return twist_by_t_power(in_u, 2); }
PolySeries substitute_u(const QSeries& in_u) { return twist_by_t_power(to_poly_series(in_u), 2); }

PolySeries d8_theta_u2(const ShiftVector& shift, const Rational& trunc) {
  static Memo<std::pair<RatVector, Rational>, PolySeries> memo;
  const ShiftVector key = shift.reduced();
  return memo.get({key.offset, trunc}, [&] {
    return substitute_u(shifted_theta(IntegralLattice::D8(), key, trunc / 2).dilate(2));
  });
}

LaurentPoly wall_denominator() { return LaurentPoly(2) * tpow(1) * t2_minus_1() * t_minus_1(); }

PolySeries mg_numerator(const C1Class& c1, const Rational& trunc) {
  const int n = c1.blowup_count;
  PolySeries b = PolySeries::one(trunc, 4);
  if (8 - n > 0) b = b * substitute_u(a1_theta_with_char(false, trunc)).pow(8 - n);
  if (n > 0) b = b * substitute_u(a1_theta_with_char(true, trunc)).pow(n);
  for (std::int64_t a = 1; a <= top_int(trunc); ++a) b.mul_binomial_power(tpow(2 * a), Rational(a), -16);
  return vacuum_numerator(VacuumKind::F, trunc) * b;
}

TSeries mg_series(const C1Class& c1, const Rational& trunc) {
  return divide_by(mg_numerator(c1, trunc), t2_minus_1() * t_minus_1());
}

TSeries proposition_series(const C1Class& c1, const Rational& trunc) {
  if (trunc < 0) throw DomainError("truncation must be nonnegative");
  const ThetaShifts sh = shifts_for(c1);
  const LaurentPoly t = tpow(1);
  const LaurentPoly a_weight = LaurentPoly(2) * t2_minus_1() * t_minus_1();
  const PolySeries th_r0 = d8_theta_u2(sh.r0, trunc);
  // everything over 2t(t^2-1)(t-1)
  PolySeries bracket = times(th_r0, -(LaurentPoly(2) + t2_minus_1())) - times(d8_theta_u2(sh.r1, trunc), LaurentPoly(2) * t);
  PolySeries a_part(4, trunc);
  for (int i = 0; i < 4; ++i) a_part += a_sum(i + 1, trunc) * d8_theta_u2(sh.s[i], trunc);
  bracket += times(a_part, a_weight);
  PolySeries num = times(mg_numerator(c1, trunc), LaurentPoly(2) * t) + zeta_x_squared(trunc) * bracket;
  return divide_by(num, wall_denominator());
}

TSeries wall_sum_oracle(const C1Class& c1, const Rational& trunc) {
  if (trunc < 0) throw DomainError("truncation must be nonnegative");
  const SurfaceData surface;
  const auto cosets = coset_system(surface, c1);
  const IntegralLattice d8 = IntegralLattice::D8();
  const Rational N = trunc;
  PolySeries s1(4, N), s2(4, N), ray(4, N), s3(4, N);
  // (t^2 q)^E t^c
  auto term = [](PolySeries& target, const Rational& E, const Rational& t_exp) {
    target.add_term(E, LaurentPoly::monomial(1, 2 * E + t_exp));
  };
  for (const auto& cs : cosets) {
    const Rational a_first = cs.a0 > 0 ? cs.a0 : Rational(1);    // smallest a > 0
    const Rational b_first = cs.b0 > 0 ? cs.b0 : Rational(1);    // smallest b > 0
    const Rational b_neg = cs.b0 > 0 ? cs.b0 - 1 : Rational(-1);  // largest b < 0
    enumerate_shell(d8, cs.offset, N, [&](const RatVector&, const Rational& nu) {
      // (xi, g) = 2a > 0, (xi, f) = 2b < 0; (xi, K_X) = -2b
      for (Rational a = a_first; -4 * a * b_neg + nu <= N; a += 1)
        for (Rational b = b_neg; -4 * a * b + nu <= N; b -= 1) term(s1, -4 * a * b + nu, -2 * b);
      // (xi, g) <= 0, (xi, f) > 0; a < 0 is finite
      for (Rational a = cs.a0 > 0 ? cs.a0 - 1 : Rational(-1); -4 * a * b_first + nu <= N; a -= 1)
        for (Rational b = b_first; -4 * a * b + nu <= N; b += 1) term(s2, -4 * a * b + nu, -2 * b);
      if (cs.a0 == 0) {
        // a = 0: sum_{b >= b_first} t^(-2b) = t^(2 - 2 b_first)/(t^2 - 1)
        term(ray, nu, 2 - 2 * b_first);
        if (cs.b0 == 0) term(s3, nu, 0);
      }
    });
  }
  const LaurentPoly t2m1 = t2_minus_1();
  PolySeries wall = times(s1 - s2, LaurentPoly(2) * t2m1) - times(ray, LaurentPoly(2)) - times(s3, t2m1);
  PolySeries num = times(mg_numerator(c1, N), LaurentPoly(2) * tpow(1)) + zeta_x_squared(N) * wall;
  return divide_by(num, wall_denominator());
}

Report compare_wall_oracle(const Rational& trunc) {
  using clock = std::chrono::steady_clock;
  Report rep;
  rep.suite = "wall-oracle";
  for (const auto& c : C1Class::all()) {
    auto t0 = clock::now();
    IdentityResult r = compare_series("wall-sum oracle = closed assembly, class " + c.name, wall_sum_oracle(c, trunc),
                                      proposition_series(c, trunc), trunc);
    r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    rep.items.push_back(std::move(r));
  }
  return rep;
}

Report check_smoothness(const C1Class& c1, const Rational& trunc) {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  Report rep;
  rep.suite = "smoothness";
  const TSeries p = proposition_series(c1, trunc);
  IdentityResult r;
  r.name = "Poincare polynomials of class " + c1.name + " are palindromic of degree 4 Delta - 3";
  r.checked_to = trunc;
  r.pass = true;
  auto fail = [&](const Rational& delta, const std::string& why) {
    if (!r.pass) return;
    r.pass = false;
    r.first_difference = delta;
    r.detail = "Delta = " + to_string(delta) + ": " + why;
  };
  for (Rational delta = c1.grid_offset; delta <= trunc; delta += 1) {
    const TRatFunc c = p.coeff(delta);
    const Rational dim = 4 * delta - 3;
    if (dim < 0) {
      if (!c.is_zero()) fail(delta, "nonzero coefficient " + c.to_string() + " below dimension 0");
      continue;
    }
    if (!c.is_polynomial()) {
      fail(delta, "not a Laurent polynomial: " + c.to_string());
      continue;
    }
    const LaurentPoly& poly = c.num();
    if (poly.is_zero() || poly.low_half() != 0 || Rational(poly.high_half()) != 2 * dim) {
      fail(delta, "degree range differs from [0, " + to_string(dim) + "]: " + poly.to_string());
      continue;
    }
    for (int h = 0; h <= poly.high_half(); ++h) {
      const Rational b = poly.coeff_half(h);
      if (!is_integer(b) || b < 0) {
        fail(delta, "coefficient " + to_string(b) + " is not a nonnegative integer");
        break;
      }
      if (b != poly.coeff_half(poly.high_half() - h)) {
        fail(delta, "not palindromic: " + poly.to_string());
        break;
      }
    }
    if (r.pass && poly.coeff_half(0) != 1) fail(delta, "constant term is not 1");
  }
  r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
  rep.items.push_back(std::move(r));
  return rep;
}

}  // namespace instanton

#include "instanton/results.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <mutex>

#include "instanton/errors.hpp"
#include "instanton/forms.hpp"
#include "instanton/lattice.hpp"
#include "instanton/moduli.hpp"

namespace instanton {

namespace {

using FN = FormName;

FormExpr fm(FN n, const Rational& k = 1) { return FormExpr::form(n, k); }
FormExpr cst(const Rational& c) { return FormExpr::constant(c); }

// -1/(24 eta^24)
FormExpr minus_pre() { return frac(-1, 24) * inv_eta_power(1, 24); }
FormExpr plus_pre() { return frac(1, 24) * inv_eta_power(1, 24); }

FormExpr th34_sum() { return fm(FN::theta3).pow(4) + fm(FN::theta4).pow(4); }

PFLabel v_label(C1Tag t) {
  switch (t) {
    case C1Tag::v0:
      return PFLabel::Zt_v0;
    case C1Tag::vEven:
      return PFLabel::Zt_vEven;
    case C1Tag::vOdd:
      return PFLabel::Zt_vOdd;
  }
  return PFLabel::Zt_v0;
}

const C1Class& c1_for(C1Tag t) {
  for (const auto& c : C1Class::all())
    if (c.tag == t) return c;
  throw DomainError("unknown c1 class");
}

// E2 at scalings 1, 2, 4 combined with integer weights.
FormExpr e2_comb(long a, long b, long c) {
  return Rational(a) * fm(FN::E2) + Rational(b) * fm(FN::E2, 2) + Rational(c) * fm(FN::E2, 4);
}

// First and second lines of each Z~_v computation (holomorphic E2 throughout).
// The sign of the theta4(2 tau)^8 term in the theta/E2 line differs between
// the classes: + for even, - for v0.
FormExpr v_line1(C1Tag t) {
  const FormExpr t3 = fm(FN::theta3, 2), t4 = fm(FN::theta4, 2), t2 = fm(FN::theta2, 2);
  if (t == C1Tag::vOdd)
    return plus_pre() * (t2.pow(2) * t3.pow(6) * e2_comb(-5, 13, -8) + t2.pow(6) * t3.pow(2) * e2_comb(-1, 1, 0));
  const FormExpr mid = t4.pow(8) * e2_comb(0, -1, 4);
  const FormExpr common = t3.pow(8) * e2_comb(-6, 19, -16) - t2.pow(8) * e2_comb(1, -1, 0);
  return plus_pre() * (t == C1Tag::vEven ? common + mid : common - mid);
}

FormExpr v_line2(C1Tag t) {
  const FormExpr t3 = fm(FN::theta3, 2), t4 = fm(FN::theta4, 2), t2 = fm(FN::theta2, 2);
  const FormExpr e1 = fm(FN::e1), F = fm(FN::F), E2 = fm(FN::E2);
  if (t == C1Tag::vOdd) {
    // -5E2 + 13E2(2tau) - 8E2(4tau) = -E2/2 + 96F - 3e1; 96, not 144
    const FormExpr a = t2.pow(2) * t3.pow(6), b = t2.pow(6) * t3.pow(2);
    return plus_pre() * (frac(-1, 2) * (a + b) * E2 + a * (Rational(96) * F - Rational(3) * e1) +
                         b * (Rational(-3) * e1));
  }
  const long sgn = t == C1Tag::vEven ? -1 : 1;
  const FormExpr w = frac(-1, 2) * (t3.pow(8) + Rational(sgn) * t4.pow(8) + t2.pow(8)) * E2;
  return plus_pre() * (w + t3.pow(8) * (Rational(15) * e1 + Rational(192) * F) +
                       Rational(sgn) * t4.pow(8) * (Rational(15) * e1 + Rational(48) * F) -
                       Rational(3) * t2.pow(8) * e1);
}

// v0 only: the line carrying 3 theta4(2 tau)^12 before it is traded for eta(2 tau).
FormExpr v0_line3() {
  const FormExpr t3 = fm(FN::theta3), t4 = fm(FN::theta4), t2 = fm(FN::theta2);
  return minus_pre() * (fm(FN::E2) * fm(FN::P0) + (t3.pow(4) * t4.pow(4) - frac(1, 8) * t2.pow(8)) * th34_sum() +
                        Rational(3) * fm(FN::theta4, 2).pow(12));
}

FormExpr aux_identity_even_lhs() {
  const FormExpr t3 = fm(FN::theta3, 2), t4 = fm(FN::theta4, 2), t2 = fm(FN::theta2, 2);
  const FormExpr e1 = fm(FN::e1), F = fm(FN::F);
  return Rational(15) * (t3.pow(8) - t4.pow(8)) * e1 + Rational(48) * (Rational(4) * t3.pow(8) - t4.pow(8)) * F -
         Rational(3) * t2.pow(8) * e1;
}
FormExpr aux_identity_even_rhs() { return frac(1, 8) * fm(FN::theta2).pow(8) * th34_sum(); }
FormExpr aux_identity_v0_lhs() {
  return Rational(2) * fm(FN::theta4, 2).pow(8) * (Rational(15) * fm(FN::e1) + Rational(48) * fm(FN::F));
}
FormExpr aux_identity_v0_rhs() {
  return -(fm(FN::theta3).pow(4) * fm(FN::theta4).pow(4) * th34_sum() + Rational(3) * fm(FN::theta4, 2).pow(12));
}

IdentityResult timed(const std::function<IdentityResult()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  IdentityResult r = f();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

QSeries b_theta_at_one(bool half, const Rational& trunc) { return eval_at_one(a1_theta_with_char(half, trunc)); }

// lim_{t->1} (B(t, t^2 q) - B(1, t^2 q)) / ((t + 1)(t - 1)^2)
QSeries blowup_limit(bool half, const Rational& trunc) {
  const PolySeries b_t = substitute_u(a1_theta_with_char(half, trunc));
  const PolySeries b_1 = substitute_u(b_theta_at_one(half, trunc));
  const LaurentPoly tm1 = t_minus(1);
  return eval_at_one(divide_by(b_t - b_1, t_plus(1) * tm1 * tm1));
}

Rational delta_of(const Rational& e) { return e + 1; }

bool is_singular_delta(const Rational& delta) {
  return is_integer(delta) && mpz_even_p(delta.get_num_mpz_t());
}

}  // namespace

std::string_view pf_label_string(PFLabel l) {
  static constexpr std::string_view names[] = {"Zt_v0", "Zt_vEven", "Zt_vOdd",  "Zt_f_v0",   "Zt_f_vEven", "Zt_f_vOdd",
                                               "Zt_0",  "Zt_even",  "Zt_odd",  "Zt_v0_int", "Z_SU2",      "Z_SO3"};
  return names[static_cast<int>(l)];
}

std::string_view provenance_string(Provenance p) {
  switch (p) {
    case Provenance::pipeline:
      return "pipeline";
    case Provenance::closed_form:
      return "closed-form";
    case Provenance::relation:
      return "relation";
  }
  return "?";
}

PartitionFunction ztilde(const C1Class& c1, const Rational& trunc) {
  if (trunc < 0) throw DomainError("truncation must be nonnegative");
  static std::mutex mu;
  static std::map<std::pair<int, Rational>, QSeries> memo;
  const std::pair<int, Rational> key{static_cast<int>(c1.tag), trunc};
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return {v_label(c1.tag), it->second, Provenance::pipeline, {}};
  }
  QSeries z;
  try {
    z = eval_at_one(proposition_series(c1, trunc + 1));
  } catch (const PoleError& e) {
    throw IntegrityError("generating function for class " + c1.name + " has a pole at t = 1: " + e.what());
  }
  z = z.shifted(-1).truncated(trunc);
  {
    std::lock_guard lock(mu);
    memo.emplace(key, z);
  }
  return {v_label(c1.tag), std::move(z), Provenance::pipeline, {}};
}

FormExpr inv_eta_power(const Rational& scaling, long power) { return fm(FN::eta, scaling).pow(-power); }

FormExpr ztilde_closed_form(C1Tag c1) {
  if (c1 == C1Tag::v0) return theorem_closed_form(C1Tag::v0) - frac(1, 8) * inv_eta_power(2, 12);
  return theorem_closed_form(c1);
}

FormExpr theorem_closed_form(C1Tag lambda) {
  const FormExpr e2 = FormExpr::e2_slot();
  const FormExpr t2 = fm(FN::theta2), t3 = fm(FN::theta3), t4 = fm(FN::theta4);
  switch (lambda) {
    case C1Tag::v0:
      return minus_pre() * (e2 * fm(FN::P0) + (t3.pow(4) * t4.pow(4) - frac(1, 8) * t2.pow(8)) * th34_sum());
    case C1Tag::vEven:
      return minus_pre() * (frac(1, 135) * e2 * fm(FN::Peven) - frac(1, 8) * t2.pow(8) * th34_sum());
    case C1Tag::vOdd:
      return minus_pre() * (frac(1, 120) * e2 * fm(FN::Podd) - frac(1, 8) * t2.pow(4) * fm(FN::E4));
  }
  throw DomainError("unknown class");
}

FormExpr z_su2_form() {
  return frac(1, 2) * (theorem_closed_form(C1Tag::v0) - frac(1, 8) * inv_eta_power(2, 12));
}

FormExpr z_so3_form() {
  return Rational(2) * (theorem_closed_form(C1Tag::v0) + Rational(135) * theorem_closed_form(C1Tag::vEven) +
                        Rational(120) * theorem_closed_form(C1Tag::vOdd)) +
         Rational(256) * inv_eta_power(frac(1, 2), 12);
}

FormExpr z_w_form(int sign) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  const FormExpr shifted = FormExpr::form(FN::eta, frac(1, 2), 1).pow(-12);
  return frac(1, 2) * (inv_eta_power(frac(1, 2), 12) + Rational(sign) * FormExpr::imaginary_unit() * shifted);
}

Report check_limit_lemmas(const Rational& trunc) {
  if (trunc < 1) throw DomainError("truncation must be at least 1");
  Report rep;
  rep.suite = "limits";
  const std::int64_t top = to_int64(floor(trunc));

  // ruled-surface factor
  rep.items.push_back(timed([&] {
    const QSeries g1 = eval_at_one(vacuum_series(VacuumKind::G, trunc));
    const auto sigma = divisor_sigma(1, top + 1);
    QSeries s(kDefaultDenom, trunc + 1);
    for (std::int64_t n = 1; n <= top + 1; ++n) s.add_term(Rational(n), Rational(2 * sigma[n]));
    const QSeries inv8 = to_series(inv_eta_power(1, 8), trunc + 1);
    return compare_series("q^(-1/3) G(1,q) = 2 sum sigma_1(n) q^n / eta^8", g1, (s * inv8).shifted(frac(1, 3)),
                          trunc);
  }));
  rep.items.push_back(timed([&] {
    const QSeries g1 = eval_at_one(vacuum_series(VacuumKind::G, trunc));
    const QSeries rhs =
        to_series(frac(1, 12) * (cst(1) - fm(FN::E2)) * inv_eta_power(1, 8), trunc + 1).shifted(frac(1, 3));
    return compare_series("q^(-1/3) G(1,q) = (1 - E2)/(12 eta^8)", g1, rhs, trunc);
  }));

  // blow-up limits
  rep.items.push_back(timed([&] {
    QSeries s(kDefaultDenom, trunc);
    for (std::int64_t m = 1; m <= top; ++m)
      for (std::int64_t n = 1; m * (2 * n - 1) <= top; ++n) s.add_term(Rational(m * (2 * n - 1)), Rational(m % 2 ? -m : m));
    const QSeries rhs = frac(-1, 2) * s * b_theta_at_one(false, trunc);
    return compare_series("B0 limit at t = 1", blowup_limit(false, trunc), rhs, trunc);
  }));
  rep.items.push_back(timed([&] {
    QSeries s = QSeries::monomial(frac(-1, 8), 0, trunc, kDefaultDenom);
    for (std::int64_t m = 1; m <= top; ++m)
      for (std::int64_t n = 1; 2 * m * n <= top; ++n) s.add_term(Rational(2 * m * n), Rational(m % 2 ? -m : m));
    const QSeries rhs = frac(-1, 2) * s * b_theta_at_one(true, trunc);
    return compare_series("B1 limit at t = 1 (with the -1/8 term)", blowup_limit(true, trunc), rhs, trunc);
  }));

  // A-sums at t = 1
  const auto sigma = divisor_sigma(1, top);
  const auto sigma_odd = divisor_sigma1_odd(top);
  for (int i = 1; i <= 4; ++i) {
    const QSeries a = eval_at_one(a_sum(i, trunc));
    QSeries direct(kDefaultDenom, trunc);
    FormExpr closed;
    switch (i) {
      case 1:
        for (std::int64_t n = 1; 4 * n <= top; ++n) direct.add_term(Rational(4 * n), Rational(4 * sigma[n]));
        closed = frac(4, 24) * (cst(1) - fm(FN::E2, 4));
        break;
      case 2:
        for (std::int64_t m = 1; m <= top; ++m)
          for (std::int64_t n = 1; 2 * m * (2 * n - 1) <= top; ++n) direct.add_term(Rational(2 * m * (2 * n - 1)), Rational(4 * m));
        closed = frac(4, 24) * (fm(FN::E2, 4) - fm(FN::E2, 2));
        break;
      case 3:
        for (std::int64_t n = 1; 2 * n <= top; ++n) direct.add_term(Rational(2 * n), Rational(2 * sigma_odd[n]));
        closed = frac(1, 12) * (Rational(-1) * fm(FN::E2, 2) + Rational(2) * fm(FN::E2, 4) - cst(1));
        break;
      default:
        for (std::int64_t m = 1; m <= top; ++m)
          for (std::int64_t n = 1; (2 * m - 1) * (2 * n - 1) <= top; ++n)
            direct.add_term(Rational((2 * m - 1) * (2 * n - 1)), Rational(2 * (2 * m - 1)));
        closed = Rational(2) * fm(FN::F);
    }
    const std::string name = "A_" + std::to_string(i) + "(1,q)";
    rep.items.push_back(compare_series(name + " divisor-sum form", a, direct, trunc));
    rep.items.push_back(compare_series(name + " E2 form", a, to_series(closed, trunc), trunc));
  }
  return rep;
}

Report compare_closed_forms(const Rational& trunc) {
  Report rep;
  rep.suite = "closed-forms";
  for (const auto& c : C1Class::all()) {
    const QSeries z = ztilde(c, trunc).series;
    const std::string who = "Z~_" + c.name;
    rep.items.push_back(timed(
        [&] { return compare_series(who + " pipeline = closed form", z, to_series(ztilde_closed_form(c.tag), trunc), trunc); }));
    rep.items.push_back(compare_series(who + " pipeline = theta/E2 line", z, to_series(v_line1(c.tag), trunc), trunc));
    rep.items.push_back(compare_series(who + " pipeline = e1/F line", z, to_series(v_line2(c.tag), trunc), trunc));
  }
  const QSeries z0 = ztilde(C1Class::v0(), trunc).series;
  rep.items.push_back(compare_series("Z~_v0 pipeline = line with 3 theta4(2tau)^12", z0, to_series(v0_line3(), trunc), trunc));
  rep.items.push_back(compare_series("theta4(2tau)^12 = eta^24 / eta(2tau)^12", to_series(fm(FN::theta4, 2).pow(12), trunc),
                                     to_series(fm(FN::eta).pow(24) * inv_eta_power(2, 12), trunc), trunc));
  rep.items.push_back(compare_series("auxiliary identity for the even class", to_series(aux_identity_even_lhs(), trunc),
                                     to_series(aux_identity_even_rhs(), trunc), trunc));
  rep.items.push_back(compare_series("auxiliary identity for v0", to_series(aux_identity_v0_lhs(), trunc),
                                     to_series(aux_identity_v0_rhs(), trunc), trunc));
  return rep;
}

TheoremAssembly assemble_theorem(const Rational& trunc) {
  if (trunc < 0) throw DomainError("truncation must be nonnegative");
  TheoremAssembly out;
  out.report.suite = "theorem";
  auto& items = out.report.items;
  const QSeries zv0 = ztilde(C1Class::v0(), trunc).series;
  const QSeries zev = ztilde(C1Class::vEven(), trunc).series;
  const QSeries zod = ztilde(C1Class::vOdd(), trunc).series;
  const QSeries h = to_series(inv_eta_power(2, 12), trunc);  // 1/eta(2 tau)^12

  out.zf_v0 = {PFLabel::Zt_f_v0, zv0 + frac(1, 4) * h, Provenance::relation, {}};
  out.zf_even = {PFLabel::Zt_f_vEven, zev, Provenance::relation, {}};
  out.zf_odd = {PFLabel::Zt_f_vOdd, zod, Provenance::relation, {}};
  out.z0 = {PFLabel::Zt_0, frac(1, 2) * (zv0 + out.zf_v0.series), Provenance::relation,
            theorem_closed_form(C1Tag::v0)};
  out.zeven = {PFLabel::Zt_even, frac(1, 2) * (zev + out.zf_even.series), Provenance::relation,
               theorem_closed_form(C1Tag::vEven)};
  out.zodd = {PFLabel::Zt_odd, frac(1, 2) * (zod + out.zf_odd.series), Provenance::relation,
              theorem_closed_form(C1Tag::vOdd)};
  out.z_v0_int = {PFLabel::Zt_v0_int, zv0 + frac(1, 4) * h, Provenance::relation, {}};

  items.push_back(compare_series("Z~_0 = Z~_v0 + 1/(8 eta(2tau)^12)", out.z0.series, zv0 + frac(1, 8) * h, trunc));
  items.push_back(timed([&] {
    return compare_series("Z~_0 theorem display", out.z0.series, to_series(*out.z0.expr, trunc), trunc);
  }));
  items.push_back(timed([&] {
    return compare_series("Z~_even theorem display", out.zeven.series, to_series(*out.zeven.expr, trunc), trunc);
  }));
  items.push_back(timed([&] {
    return compare_series("Z~_odd theorem display", out.zodd.series, to_series(*out.zodd.expr, trunc), trunc);
  }));
  items.push_back(compare_series(
      "Z~int_v0 = closed-form Z~_v0 + 1/(4 eta(2tau)^12)", out.z_v0_int.series,
      to_series(ztilde_closed_form(C1Tag::v0) + frac(1, 4) * inv_eta_power(2, 12), trunc), trunc));

  // chi(X) from the Betti numbers of X
  const SurfaceData sd;
  long chi = 0;
  for (std::size_t i = 0; i < sd.betti_X.size(); ++i) chi += (i % 2 ? -1 : 1) * sd.betti_X[i];
  items.push_back(compare_series("Z~int_v0 - 1/(4 eta(2tau)^chi(X)) = Z~_v0, chi(X) = " + std::to_string(chi),
                                 out.z_v0_int.series - frac(1, 4) * to_series(inv_eta_power(2, chi), trunc), zv0,
                                 trunc));

  IdentityResult grid;
  grid.name = "Z~_odd - Z~_even leading exponents differ by 1/2";
  grid.checked_to = trunc;
  const auto ve = out.zeven.series.valuation(), vo = out.zodd.series.valuation();
  grid.pass = ve && vo && *vo - *ve == frac(1, 2);
  if (!grid.pass) grid.detail = "leading exponents do not sit on offset grids";
  items.push_back(grid);

  const GaugeFunctions g = gauge_partition_functions(trunc);
  items.push_back(compare_series("Z_SU2 = (Z~_0 - 1/(8 eta(2tau)^12))/2 from the pipeline", g.su2.series,
                                 frac(1, 2) * (out.z0.series - frac(1, 8) * h), trunc));
  const QSeries so3_pipe = Rational(2) * (out.z0.series + Rational(135) * out.zeven.series + Rational(120) * out.zodd.series) +
                           Rational(256) * to_series(inv_eta_power(frac(1, 2), 12), trunc);
  items.push_back(compare_series("Z_SO3 = 2(Z~_0 + 135 Z~_even + 120 Z~_odd) + 256/eta(tau/2)^12 from the pipeline",
                                 g.so3.series, so3_pipe, trunc));
  return out;
}

GaugeFunctions gauge_partition_functions(const Rational& trunc) {
  GaugeFunctions g{{PFLabel::Z_SU2, to_series(z_su2_form(), trunc), Provenance::closed_form, z_su2_form()},
                   {PFLabel::Z_SO3, to_series(z_so3_form(), trunc), Provenance::closed_form, z_so3_form()}};
  return g;
}

IntegralityReport check_integrality(const Rational& trunc) {
  IntegralityReport out;
  out.report.suite = "integrality";
  const TheoremAssembly th = assemble_theorem(trunc);
  std::vector<std::pair<PartitionFunction, bool>> list;
  for (const auto& c : C1Class::all()) list.push_back({ztilde(c, trunc), c.tag == C1Tag::v0});
  // the f + v0 and intersection-cohomology variants absorb the singular
  // fractions, so they must be integral everywhere
  list.push_back({th.zf_v0, false});
  list.push_back({th.z_v0_int, false});
  list.push_back({th.z0, true});
  list.push_back({th.zeven, false});
  list.push_back({th.zodd, false});
  for (const auto& [pf, has_singular] : list) {
    IdentityResult r;
    r.name = std::string(pf_label_string(pf.label)) + ": Euler-characteristic coefficients are integers";
    r.checked_to = trunc;
    r.pass = true;
    for (const auto& [k, c] : pf.series.terms()) {
      if (is_integer(c)) continue;
      const Rational delta = delta_of(pf.series.exponent_of(k));
      if (has_singular && is_singular_delta(delta)) {
        out.singular_nonintegral.push_back({std::string(pf_label_string(pf.label)), delta, c});
        continue;
      }
      if (r.pass) {
        r.pass = false;
        r.first_difference = pf.series.exponent_of(k);
        r.detail = "coefficient " + to_string(c) + " at Delta = " + to_string(delta);
      }
    }
    out.report.items.push_back(std::move(r));
  }
  return out;
}

Report check_vanishing(const Rational& trunc) {
  Report rep;
  rep.suite = "vanishing";
  for (const auto& c : {C1Class::vEven(), C1Class::vOdd()}) {
    const QSeries z = ztilde(c, trunc).series;
    IdentityResult r;
    r.name = "Z~_" + c.name + " vanishes where 4 Delta - 3 < 0";
    r.checked_to = trunc;
    r.pass = true;
    for (const auto& [k, v] : z.terms()) {
      const Rational delta = delta_of(z.exponent_of(k));
      if (4 * delta - 3 < 0) {
        r.pass = false;
        r.first_difference = z.exponent_of(k);
        r.detail = "nonzero coefficient " + to_string(v) + " at Delta = " + to_string(delta);
        break;
      }
    }
    rep.items.push_back(std::move(r));
  }
  return rep;
}

TableClass parse_table_class(std::string_view text) {
  if (text == "v0") return TableClass::v0;
  if (text == "even") return TableClass::even;
  if (text == "odd") return TableClass::odd;
  if (text == "lambda0") return TableClass::lambda0;
  if (text == "lambdaEven") return TableClass::lambdaEven;
  if (text == "lambdaOdd") return TableClass::lambdaOdd;
  throw DomainError("unknown table class '" + std::string(text) + "'");
}

std::string_view table_class_string(TableClass c) {
  static constexpr std::string_view names[] = {"v0", "even", "odd", "lambda0", "lambdaEven", "lambdaOdd"};
  return names[static_cast<int>(c)];
}

EulerTable euler_table(TableClass cls, const Rational& max_delta, const Rational& order) {
  if (order < 0) throw DomainError("order must be nonnegative");
  if (max_delta > order + 1)
    throw TruncationError("max Delta " + to_string(max_delta) + " is beyond the order: Z~ is known to q^" +
                          to_string(order) + ", i.e. Delta <= " + to_string(order + 1));
  const bool is_lambda = cls == TableClass::lambda0 || cls == TableClass::lambdaEven || cls == TableClass::lambdaOdd;
  const C1Tag tag = (cls == TableClass::v0 || cls == TableClass::lambda0)       ? C1Tag::v0
                    : (cls == TableClass::even || cls == TableClass::lambdaEven) ? C1Tag::vEven
                                                                                 : C1Tag::vOdd;
  const C1Class& c1 = c1_for(tag);
  const Rational zt = std::max(Rational(max_delta - 1), Rational(0));
  QSeries z = ztilde(c1, zt).series;
  if (cls == TableClass::lambda0) z = z + frac(1, 8) * to_series(inv_eta_power(2, 12), zt);
  std::optional<TSeries> prop;
  if (!is_lambda && max_delta >= 0) prop = proposition_series(c1, std::max(max_delta, Rational(0)));

  EulerTable t{cls, {}};
  for (Rational delta = c1.grid_offset; delta <= max_delta; delta += 1) {
    EulerRow row;
    row.delta = delta;
    row.dim = Integer(4 * delta - 3);
    row.euler = z.coeff(delta - 1);
    row.singular = tag == C1Tag::v0 && is_singular_delta(delta);
    if (!is_lambda && !row.singular) {
      const TRatFunc p = prop->coeff(delta);
      if (!p.is_polynomial())
        throw IntegrityError("coefficient at Delta = " + to_string(delta) + " is not a polynomial in t");
      std::vector<Integer> b;
      for (long i = 0; i <= 2 * to_int64(row.dim); ++i) {
        const Rational c = p.num().coeff_half(static_cast<int>(i));
        if (!is_integer(c)) throw IntegrityError("non-integral Betti number at Delta = " + to_string(delta));
        b.push_back(c.get_num());
      }
      row.betti = std::move(b);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::optional<FormExpr> named_form(std::string_view name) {
  if (auto f = parse_form_name(name)) return FormExpr::form(*f);
  if (name == "E2hat") return FormExpr::e2_slot();
  if (name == "Zt_0" || name == "Z_0") return theorem_closed_form(C1Tag::v0);
  if (name == "Zt_even" || name == "Z_even") return theorem_closed_form(C1Tag::vEven);
  if (name == "Zt_odd" || name == "Z_odd") return theorem_closed_form(C1Tag::vOdd);
  if (name == "Zt_v0") return ztilde_closed_form(C1Tag::v0);
  if (name == "Z_SU2") return z_su2_form();
  if (name == "Z_SO3") return z_so3_form();
  if (name == "Z_w0") return z_w_form(1);
  if (name == "Z_w1") return z_w_form(-1);
  return std::nullopt;
}

}  // namespace instanton

#include "instanton/numeric.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "instanton/errors.hpp"
#include "instanton/results.hpp"

namespace instanton {

namespace {

std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}

Real to_real(const Rational& r) { return Real(r.get_num().get_str()) / Real(r.get_den().get_str()); }

Real pi() { return boost::multiprecision::acos(Real(-1)); }

std::string real_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

// Everything a leaf needs: the target accuracy and the term budget.
struct Ctx {
  Real eps;
  Real margin;
  const NumericConfig& cfg;
  Real two_pi;

  void check_budget(long n, const char* what) const {
    if (n > cfg.max_terms)
      throw ConvergenceError(std::string(what) + " did not converge within " + std::to_string(cfg.max_terms) + " terms");
  }
};

ComplexAP scale(const ComplexAP& z, const Real& s) { return {z.re * s, z.im * s}; }

// exp(2 pi i a z)
ComplexAP nome(const ComplexAP& z, const Ctx& c, const Real& a = Real(1)) {
  return exp(ComplexAP{-c.two_pi * a * z.im, c.two_pi * a * z.re});
}

ComplexAP theta_sum(const ComplexAP& x, bool alternate, bool half, const Ctx& c) {
  // full: 1 + 2 sum_{n>=1} (+-1)^n x^(n^2); half: 2 sum_{n>=0} x^(n^2 + n)
  const Real r = x.abs();
  if (r >= 1) throw DomainError("theta argument outside the upper half-plane");
  ComplexAP sum = half ? ComplexAP{Real(0)} : ComplexAP{Real(1)};
  ComplexAP term = half ? ComplexAP{Real(1)} : x;  // x^(n^2) or x^(n^2 + n)
  ComplexAP step = half ? x * x : x * x * x;       // ratio to the next term
  const ComplexAP x2 = x * x;
  for (long n = half ? 0 : 1;; ++n) {
    c.check_budget(n, "theta series");
    const bool neg = alternate && (n % 2);
    sum += scale(term, Real(neg ? -2 : 2));
    term *= step;
    step *= x2;
    // remaining terms are bounded by a geometric series in r
    if (2 * term.abs() / (1 - r) * c.margin < c.eps * sum.abs()) break;
  }
  return sum;
}

// sum_{n>=1} w(n) q^n / (1 - q^(d n)) over n in an arithmetic class, weighted
// by n^power. Lambert form of the divisor sums.
ComplexAP lambert(const ComplexAP& q, int power, bool odd_only, int den_mult, const Ctx& c) {
  const Real r = q.abs();
  if (r >= 1) throw DomainError("Lambert series argument outside the unit disk");
  ComplexAP sum, qn = q;
  const ComplexAP one{Real(1)};
  for (long n = 1;; ++n) {
    c.check_budget(n, "Lambert series");
    if (!odd_only || (n % 2)) {
      ComplexAP qd = qn;
      for (int k = 1; k < den_mult; ++k) qd *= qn;
      Real w = 1;
      for (int k = 0; k < power; ++k) w *= n;
      sum += scale(qn / (one - qd), w);
    }
    qn *= q;
    const Real rn = qn.abs();
    Real w = 1;
    for (int k = 0; k < power; ++k) w *= (n + 1);
    // n^p r^n / (1 - r^n) summed beyond n, crude geometric envelope
    const Real ratio = r * boost::multiprecision::pow(Real(n + 2) / Real(n + 1), power);
    if (ratio < 1 && w * rn / ((1 - rn) * (1 - ratio)) * c.margin < c.eps * (1 + sum.abs())) break;
  }
  return sum;
}

ComplexAP eisenstein(const ComplexAP& z, int k, const Ctx& c) {
  const ComplexAP q = nome(z, c);
  if (k == 2) return ComplexAP{Real(1)} - scale(lambert(q, 1, false, 1, c), Real(24));
  return ComplexAP{Real(1)} + scale(lambert(q, 3, false, 1, c), Real(240));
}

ComplexAP eta(const ComplexAP& z, const Ctx& c) {
  const ComplexAP q = nome(z, c);
  const Real r = q.abs();
  ComplexAP prod{Real(1)}, qn = q;
  const ComplexAP one{Real(1)};
  for (long n = 1;; ++n) {
    c.check_budget(n, "eta product");
    prod *= one - qn;
    qn *= q;
    // |log prod_{m>n}(1 - q^m)| <= 2 r^(n+1) / (1 - r) for small r^(n+1)
    if (2 * qn.abs() / (1 - r) * c.margin < c.eps) break;
  }
  return nome(z, c, Real(1) / 24) * prod;
}

ComplexAP leaf(FormName name, const ComplexAP& z, const Ctx& c) {
  if (z.im <= 0) throw DomainError("form evaluated outside the upper half-plane");
  const ComplexAP half{Real(1) / 2};
  switch (name) {
    case FormName::theta3:
      return theta_sum(nome(z, c, Real(1) / 2), false, false, c);
    case FormName::theta4:
      return theta_sum(nome(z, c, Real(1) / 2), true, false, c);
    case FormName::theta2:
      // 2 sum_{n>=0} q^((n+1/2)^2/2) = 2 q^(1/8) sum q^((n^2+n)/2)
      return nome(z, c, Real(1) / 8) * theta_sum(nome(z, c, Real(1) / 2), false, true, c);
    case FormName::BigTheta:
      return leaf(FormName::theta3, scale(z, Real(2)), c);
    case FormName::E2:
      return eisenstein(z, 2, c);
    case FormName::E4:
      return eisenstein(z, 4, c);
    case FormName::eta:
      return eta(z, c);
    case FormName::e1:
      return ComplexAP{Real(-1) / 6} - scale(lambert(nome(z, c), 1, true, 1, c), Real(4));
    case FormName::F:
      return lambert(nome(z, c), 1, true, 2, c);
    case FormName::P0:
      return eisenstein(scale(z, Real(2)), 4, c);
    case FormName::Peven:
    case FormName::Podd: {
      const ComplexAP zh = scale(z, Real(1) / 2);
      const ComplexAP a = eisenstein(zh, 4, c), b = eisenstein(zh + half, 4, c);
      if (name == FormName::Podd) return scale(a - b, Real(1) / 2);
      return scale(a + b, Real(1) / 2) - eisenstein(scale(z, Real(2)), 4, c);
    }
  }
  throw DomainError("unknown form");
}

using LeafKey = std::tuple<FormName, Rational, int>;

ComplexAP eval_rec(const FormExpr& e, const ComplexAP& tau, E2Mode mode, const Ctx& c,
                   std::map<LeafKey, ComplexAP>& cache) {
  const auto& n = e.node();
  switch (n.op) {
    case FormExpr::Op::Form: {
      const LeafKey key{n.name, n.scaling, n.half_shift};
      if (auto it = cache.find(key); it != cache.end()) return it->second;
      ComplexAP z = scale(tau, to_real(n.scaling));
      if (n.half_shift) z.re += Real(1) / 2;
      ComplexAP v = leaf(n.name, z, c);
      cache.emplace(key, v);
      return v;
    }
    case FormExpr::Op::E2Slot: {
      ComplexAP v = eval_rec(FormExpr::form(FormName::E2), tau, mode, c, cache);
      if (mode == E2Mode::anomaly) v.re -= Real(3) / (pi() * tau.im);
      return v;
    }
    case FormExpr::Op::Const:
      return ComplexAP{to_real(n.value)};
    case FormExpr::Op::ImagUnit:
      return ComplexAP::i();
    case FormExpr::Op::Add:
      return eval_rec(n.children[0], tau, mode, c, cache) + eval_rec(n.children[1], tau, mode, c, cache);
    case FormExpr::Op::Mul:
      return eval_rec(n.children[0], tau, mode, c, cache) * eval_rec(n.children[1], tau, mode, c, cache);
    case FormExpr::Op::Pow:
      return eval_rec(n.children[0], tau, mode, c, cache).pow(n.exponent);
  }
  throw DomainError("unknown expression node");
}

void require_point(const ComplexAP& tau, const NumericConfig& cfg) {
  if (!(tau.im > cfg.min_imag))
    throw DomainError("Im tau = " + real_string(tau.im, 6) + " is below the configured minimum " +
                      std::to_string(cfg.min_imag));
}

}  // namespace

ComplexAP& ComplexAP::operator+=(const ComplexAP& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ComplexAP& ComplexAP::operator-=(const ComplexAP& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ComplexAP& ComplexAP::operator*=(const ComplexAP& o) {
  Real r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = std::move(r);
  return *this;
}

ComplexAP& ComplexAP::operator/=(const ComplexAP& o) {
  const Real d = o.re * o.re + o.im * o.im;
  if (d == 0) throw DomainError("division by zero");
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Real ComplexAP::abs() const { return boost::multiprecision::sqrt(re * re + im * im); }

ComplexAP ComplexAP::pow(long n) const {
  if (n < 0) return ComplexAP{Real(1)} / pow(-n);
  ComplexAP result{Real(1)}, base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

std::string ComplexAP::to_string(int digits) const {
  std::string s = real_string(re, digits);
  s += im < 0 ? " - " : " + ";
  s += real_string(boost::multiprecision::abs(im), digits) + "i";
  return s;
}

ComplexAP exp(const ComplexAP& z) {
  const Real m = boost::multiprecision::exp(z.re);
  return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

PrecisionScope::PrecisionScope(int digits) {
  precision_mutex().lock();
  saved_ = Real::default_precision();
  Real::default_precision(static_cast<unsigned>(digits));
}

PrecisionScope::~PrecisionScope() {
  Real::default_precision(saved_);
  precision_mutex().unlock();
}

ComplexAP parse_complex(std::string_view text, int digits) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw DomainError("empty complex number");
  PrecisionScope scope(digits);
  auto parse_real = [&](const std::string& t) -> Real {
    if (t.empty() || t == "+") return Real(1);
    if (t == "-") return Real(-1);
    for (char ch : t)
      if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '.' || ch == '-' || ch == '+' || ch == 'e' ||
            ch == 'E'))
        throw DomainError("cannot parse '" + std::string(text) + "' as a complex number");
    try {
      return Real(t);
    } catch (const std::exception&) {
      throw DomainError("cannot parse '" + std::string(text) + "' as a complex number");
    }
  };
  if (s.back() != 'i') return {parse_real(s), Real(0)};
  s.pop_back();
  // split at the last sign that is not part of an exponent
  std::size_t cut = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  if (cut == std::string::npos) return {Real(0), parse_real(s)};
  return {parse_real(s.substr(0, cut)), parse_real(s.substr(cut))};
}

ComplexAP eval_form(const FormExpr& expr, const ComplexAP& tau, int digits, E2Mode mode, const NumericConfig& cfg) {
  if (digits < 1) throw DomainError("digits must be positive");
  PrecisionScope scope(digits + cfg.guard_digits);
  require_point(tau, cfg);
  const Ctx c{boost::multiprecision::pow(Real(10), -(digits + 5)),
              boost::multiprecision::pow(Real(2), cfg.growth_margin_bits), cfg, 2 * pi()};
  std::map<LeafKey, ComplexAP> cache;
  return eval_rec(expr, tau, mode, c, cache);
}

ComplexAP eval_qseries(const QSeries& s, const ComplexAP& tau, int digits) {
  PrecisionScope scope(digits + 15);
  const Real two_pi = 2 * pi();
  ComplexAP sum;
  for (const auto& [k, c] : s.terms()) {
    const Real e = to_real(s.exponent_of(k));
    sum += ComplexAP{to_real(c)} * exp(ComplexAP{-two_pi * e * tau.im, two_pi * e * tau.re});
  }
  return sum;
}

SDualityResult sduality_check(const ComplexAP& tau, int digits, E2Mode mode, double threshold,
                              const NumericConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  PrecisionScope scope(digits + cfg.guard_digits);
  require_point(tau, cfg);
  SDualityResult r;
  r.tau = tau;
  r.mode = mode;
  r.threshold = threshold > 0 ? threshold : std::pow(10.0, -(digits - 10));
  const ComplexAP s = ComplexAP{Real(-1)} / tau;
  r.lhs = eval_form(z_su2_form(), s, digits, mode, cfg);
  const ComplexAP pref = ComplexAP{Real(-1) / 64} * (tau / ComplexAP::i()).pow(-6);
  r.rhs = pref * eval_form(z_so3_form(), tau, digits, mode, cfg);
  r.rel_error = (r.lhs - r.rhs).abs() / r.rhs.abs();
  r.pass = r.rel_error < Real(r.threshold);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace instanton

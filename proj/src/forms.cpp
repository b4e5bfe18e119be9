#include "instanton/forms.hpp"

#include <array>

#include "instanton/errors.hpp"

namespace instanton {

namespace {

constexpr std::array<std::pair<FormName, std::string_view>, 12> kNames{{
    {FormName::theta2, "theta2"},
    {FormName::theta3, "theta3"},
    {FormName::theta4, "theta4"},
    {FormName::BigTheta, "BigTheta"},
    {FormName::E2, "E2"},
    {FormName::E4, "E4"},
    {FormName::eta, "eta"},
    {FormName::e1, "e1"},
    {FormName::F, "F"},
    {FormName::P0, "P0"},
    {FormName::Peven, "Peven"},
    {FormName::Podd, "Podd"},
}};

std::int64_t floor_int(const Rational& r) { return to_int64(floor(r)); }

// sum over n in Z (or Z + 1/2) of (+-1)^n q^(n^2/2), folded onto n >= 0
QSeries theta_sum(const Rational& trunc, bool half_offset, bool alternate) {
  QSeries s(kDefaultDenom, trunc);
  for (std::int64_t m = 0;; ++m) {
    Rational n = half_offset ? Rational(2 * m + 1, 2) : Rational(m);
    Rational e = n * n / 2;
    if (e > trunc) break;
    Rational c = (!half_offset && m == 0) ? 1 : 2;
    if (alternate && (m % 2 != 0)) c = -c;
    s.add_term(e, c);
  }
  return s;
}

QSeries eisenstein(const Rational& trunc, int k, long scale) {
  const std::int64_t n_max = floor_int(trunc);
  auto sigma = divisor_sigma(k, std::max<std::int64_t>(n_max, 0));
  QSeries s(kDefaultDenom, trunc);
  s.add_term(0, 1);
  for (std::int64_t n = 1; n <= n_max; ++n) s.add_term(n, Rational(sigma[static_cast<std::size_t>(n)] * scale));
  return s;
}

}  // namespace

std::string_view form_name_string(FormName name) {
  for (const auto& [n, s] : kNames)
    if (n == name) return s;
  return "?";
}

std::optional<FormName> parse_form_name(std::string_view text) {
  for (const auto& [n, s] : kNames)
    if (s == text) return n;
  return std::nullopt;
}

const std::vector<FormName>& all_form_names() {
  static const std::vector<FormName> names = [] {
    std::vector<FormName> v;
    for (const auto& [n, s] : kNames) v.push_back(n);
    return v;
  }();
  return names;
}

std::vector<Integer> divisor_sigma(int k, std::int64_t n_max) {
  std::vector<Integer> sigma(static_cast<std::size_t>(n_max + 1), Integer(0));
  for (std::int64_t d = 1; d <= n_max; ++d) {
    Integer dk;
    mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    for (std::int64_t m = d; m <= n_max; m += d) sigma[static_cast<std::size_t>(m)] += dk;
  }
  return sigma;
}

std::vector<Integer> divisor_sigma1_odd(std::int64_t n_max) {
  std::vector<Integer> sigma(static_cast<std::size_t>(n_max + 1), Integer(0));
  for (std::int64_t d = 1; d <= n_max; d += 2)
    for (std::int64_t m = d; m <= n_max; m += d) sigma[static_cast<std::size_t>(m)] += d;
  return sigma;
}

FormTable::FormTable(const FormTable& other) {
  std::lock_guard lock(other.mutex_);
  perturbations_ = other.perturbations_;
  cache_ = other.cache_;
}

void FormTable::perturb(FormName name, const Rational& exponent, const Rational& delta) {
  std::lock_guard lock(mutex_);
  perturbations_[name].emplace_back(exponent, delta);
  cache_.clear();
}

QSeries FormTable::get(FormName name, const Rational& scaling, const Rational& trunc) const {
  if (trunc < 0) throw DomainError("form truncation must be nonnegative");
  if (scaling <= 0) throw DomainError("form scaling must be positive");
  const auto key = std::make_tuple(name, scaling, trunc);
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  QSeries s = scaling == 1 ? base(name, trunc) : base(name, trunc / scaling).dilate(scaling);
  std::lock_guard lock(mutex_);
  cache_.emplace(key, s);
  return s;
}

QSeries FormTable::base(FormName name, const Rational& trunc) const {
  QSeries s;
  switch (name) {
    case FormName::theta2:
      s = theta_sum(trunc, true, false);
      break;
    case FormName::theta3:
      s = theta_sum(trunc, false, false);
      break;
    case FormName::theta4:
      s = theta_sum(trunc, false, true);
      break;
    case FormName::BigTheta:
      s = get(FormName::theta3, 2, trunc);
      break;
    case FormName::E2:
      s = eisenstein(trunc, 1, -24);
      break;
    case FormName::E4:
      s = eisenstein(trunc, 3, 240);
      break;
    case FormName::eta: {
      // q^(1/24) prod (1 - q^n)
      s = QSeries(kDefaultDenom, trunc);
      s.add_term(Rational(1, 24), 1);
      for (std::int64_t n = 1; n <= floor_int(trunc); ++n) s.mul_binomial_power(Rational(1), n, 1);
      break;
    }
    case FormName::e1: {
      const std::int64_t n_max = floor_int(trunc);
      auto odd = divisor_sigma1_odd(n_max);
      s = QSeries(kDefaultDenom, trunc);
      s.add_term(0, Rational(-1, 6));
      for (std::int64_t n = 1; n <= n_max; ++n) s.add_term(n, Rational(-4 * odd[static_cast<std::size_t>(n)]));
      break;
    }
    case FormName::F: {
      const std::int64_t n_max = floor_int(trunc);
      auto sigma = divisor_sigma(1, n_max);
      s = QSeries(kDefaultDenom, trunc);
      for (std::int64_t n = 1; n <= n_max; n += 2) s.add_term(n, Rational(sigma[static_cast<std::size_t>(n)]));
      break;
    }
    case FormName::P0:
      s = get(FormName::E4, 2, trunc);
      break;
    case FormName::Peven:
    case FormName::Podd: {
      // (E4(tau/2) +- E4(tau/2 + 1/2)) / 2, the first minus E4(2 tau)
      QSeries e4 = get(FormName::E4, 2 * trunc);
      QSeries plain = e4.dilate(Rational(1, 2)).lifted(kDefaultDenom);
      QSeries twisted = e4.half_period_shift().dilate(Rational(1, 2)).lifted(kDefaultDenom);
      if (name == FormName::Peven)
        s = (plain + twisted) * Rational(1, 2) - get(FormName::E4, 2, trunc);
      else
        s = (plain - twisted) * Rational(1, 2);
      break;
    }
  }
  auto it = perturbations_.find(name);
  if (it != perturbations_.end())
    for (const auto& [e, delta] : it->second)
      if (e <= trunc) s.add_term(e, delta);
  return s;
}

QSeries gen_form(FormName name, const Rational& scaling, const Rational& trunc) {
  static const FormTable table;
  return table.get(name, scaling, trunc);
}

QSeries p_weight(PWeight kind, const Rational& trunc) {
  switch (kind) {
    case PWeight::P0:
      return gen_form(FormName::P0, 1, trunc);
    case PWeight::Peven:
      return gen_form(FormName::Peven, 1, trunc);
    case PWeight::Podd:
      return gen_form(FormName::Podd, 1, trunc);
  }
  throw DomainError("unknown P weight");
}

}  // namespace instanton

#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string_view>
#include <tuple>
#include <vector>

#include "instanton/rational.hpp"
#include "instanton/report.hpp"
#include "instanton/series.hpp"

namespace instanton {

enum class FormName { theta2, theta3, theta4, BigTheta, E2, E4, eta, e1, F, P0, Peven, Podd };

std::string_view form_name_string(FormName name);
std::optional<FormName> parse_form_name(std::string_view text);
const std::vector<FormName>& all_form_names();

// Exponent grid of every generated form: 1/48 covers theta2 (1/8), eta (1/24)
// and eta(tau/2) (1/48).
inline constexpr std::int64_t kDefaultDenom = 48;

// sigma_k(n) for n = 0..n_max (sigma_k(0) = 0), by sieve.
std::vector<Integer> divisor_sigma(int k, std::int64_t n_max);
// sum of odd divisors of n, n = 0..n_max.
std::vector<Integer> divisor_sigma1_odd(std::int64_t n_max);

// Exact q-expansion of the named form at argument scaling * tau, known to
// q^trunc.
QSeries gen_form(FormName name, const Rational& scaling, const Rational& trunc);

enum class PWeight { P0, Peven, Podd };
QSeries p_weight(PWeight kind, const Rational& trunc);

// Memoizing form constructor. Perturbations alter a base (scaling 1)
// constructor and propagate to every derived form (dilates, Theta, the P
// weights), which is how the negative controls inject a single wrong
// coefficient.
class FormTable {
 public:
  FormTable() = default;
  FormTable(const FormTable& other);
  FormTable& operator=(const FormTable&) = delete;

  QSeries get(FormName name, const Rational& scaling, const Rational& trunc) const;
  QSeries get(FormName name, const Rational& trunc) const { return get(name, 1, trunc); }

  // Adds delta to the coefficient of q^exponent of the base form.
  void perturb(FormName name, const Rational& exponent, const Rational& delta);
  bool perturbed() const { return !perturbations_.empty(); }

 private:
  QSeries base(FormName name, const Rational& trunc) const;

  std::map<FormName, std::vector<std::pair<Rational, Rational>>> perturbations_;
  mutable std::mutex mutex_;
  mutable std::map<std::tuple<FormName, Rational, Rational>, QSeries> cache_;
};

// Identities among theta functions, Eisenstein series and the P weights.
// The E8 line enumerates the E8 lattice directly.
Report verify_section1(const Rational& trunc, const FormTable& forms);
Report verify_section1(const Rational& trunc);

}  // namespace instanton

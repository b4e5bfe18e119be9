#include "instanton/suites.hpp"

#include <chrono>

#include "instanton/errors.hpp"
#include "instanton/lattice.hpp"
#include "instanton/moduli.hpp"
#include "instanton/results.hpp"
#include "instanton/surface.hpp"

namespace instanton {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "d8",           "surface", "limits",  "wall-oracle",
                                              "smoothness", "closed-forms", "theorem", "controls"};
  return names;
}

std::vector<ControlCase> default_controls() {
  // theta2 enters the suite first through theta2^4, three factors of q^(1/8)
  return {{FormName::e1, 1, 1},           {FormName::e1, 4, 4},
          {FormName::e1, 7, 7},           {FormName::theta3, frac(1, 2), frac(1, 2)},
          {FormName::theta3, 2, 2},       {FormName::theta3, frac(9, 2), frac(9, 2)},
          {FormName::theta4, frac(1, 2), frac(1, 2)}, {FormName::theta4, 8, 8},
          {FormName::theta2, frac(1, 8), frac(1, 2)},  {FormName::theta2, frac(9, 8), frac(3, 2)},
          {FormName::theta2, frac(25, 8), frac(7, 2)}};
}

Report negative_controls(const Rational& trunc, const std::vector<ControlCase>& cases) {
  Report rep;
  rep.suite = "controls";
  for (const auto& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    FormTable forms;
    forms.perturb(c.form, c.exponent, 1);
    const Report r = verify_section1(trunc, forms);
    std::optional<Rational> first;
    std::string where;
    bool all_localized = true;
    for (const auto& i : r.items) {
      if (i.pass) continue;
      if (!i.first_difference) {
        all_localized = false;
        continue;
      }
      if (!first || *i.first_difference < *first) {
        first = i.first_difference;
        where = i.name;
      }
    }
    IdentityResult item;
    item.name = "perturbed " + std::string(form_name_string(c.form)) + " at q^" + to_string(c.exponent) +
                " is caught at q^" + to_string(c.expected_first);
    item.checked_to = trunc;
    item.pass = !r.passed() && all_localized && first && *first == c.expected_first;
    item.first_difference = first;
    if (r.passed())
      item.detail = "the identity suite did not notice the perturbation";
    else if (!item.pass)
      item.detail = "earliest difference at q^" + (first ? to_string(*first) : std::string("?")) + " in " + where;
    else
      item.detail = "first caught by: " + where;
    item.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.items.push_back(std::move(item));
  }
  return rep;
}

Report run_suite(std::string_view name, const SuiteConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  if (name == "identities") {
    rep = verify_section1(cfg.order);
  } else if (name == "d8") {
    rep = verify_d8_decompositions(cfg.order);
  } else if (name == "surface") {
    rep = verify_surface_data();
  } else if (name == "limits") {
    rep = check_limit_lemmas(cfg.order);
  } else if (name == "wall-oracle") {
    rep = compare_wall_oracle(cfg.oracle_order);
  } else if (name == "smoothness") {
    rep = check_smoothness(C1Class::vEven(), cfg.order);
    rep.append(check_smoothness(C1Class::vOdd(), cfg.order));
  } else if (name == "closed-forms") {
    rep = compare_closed_forms(cfg.order);
  } else if (name == "theorem") {
    rep = assemble_theorem(cfg.order).report;
    const IntegralityReport in = check_integrality(cfg.order);
    rep.append(in.report);
    rep.append(check_vanishing(cfg.order));
  } else if (name == "controls") {
    rep = negative_controls(std::min(cfg.order, Rational(12)), default_controls());
  } else {
    throw DomainError("unknown suite '" + std::string(name) + "'");
  }
  rep.suite = std::string(name);
  // items that did not time themselves share the suite's wall clock
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool any = false;
  for (const auto& i : rep.items) any = any || i.seconds > 0;
  if (!any && !rep.items.empty()) rep.items.front().seconds = total;
  return rep;
}

}  // namespace instanton

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "instanton/forms.hpp"
#include "instanton/report.hpp"

namespace instanton {

struct SuiteConfig {
  Rational order = 20;
  Rational oracle_order = 6;
};

// identities, d8, surface, limits, wall-oracle, smoothness, closed-forms,
// theorem, controls
const std::vector<std::string>& suite_names();
Report run_suite(std::string_view name, const SuiteConfig& cfg);

// One injected error: add 1 to the coefficient of q^exponent of a base form.
// The identity suite must fail, and its earliest reported difference must be
// expected_first (the exponent the error first reaches in any checked side).
struct ControlCase {
  FormName form;
  Rational exponent;
  Rational expected_first;
};
std::vector<ControlCase> default_controls();
// Items pass when the perturbation is caught at the expected exponent.
Report negative_controls(const Rational& trunc, const std::vector<ControlCase>& cases);

}  // namespace instanton

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "instanton/rational.hpp"
#include "instanton/series.hpp"

namespace instanton {

// Outcome of checking one identity coefficientwise.
struct IdentityResult {
  std::string name;
  bool pass = false;
  Rational checked_to;                       // largest exponent compared
  std::optional<Rational> first_difference;  // set when pass == false and known
  std::string detail;
  double seconds = 0;
};

struct Report {
  std::string suite;
  std::vector<IdentityResult> items;

  bool passed() const;
  const IdentityResult* first_failure() const;
  void append(const Report& other);
};

// Compares two series on every exponent <= upto. Both sides must be known
// that far; a short truncation counts as a failure, never as a silent pass.
template <class C>
IdentityResult compare_series(std::string name, const Series<C>& lhs, const Series<C>& rhs, const Rational& upto) {
  IdentityResult r;
  r.name = std::move(name);
  r.checked_to = upto;
  if (lhs.trunc() < upto || rhs.trunc() < upto) {
    r.detail = "insufficient truncation: lhs to " + to_string(lhs.trunc()) + ", rhs to " + to_string(rhs.trunc());
    return r;
  }
  auto diff = lhs.truncated(upto) - rhs.truncated(upto);
  if (diff.is_zero()) {
    r.pass = true;
    return r;
  }
  const auto& [k, c] = *diff.terms().begin();
  r.first_difference = diff.exponent_of(k);
  r.detail = "first difference at q^" + to_string(*r.first_difference) + ": lhs " +
             CoeffTraits<C>::to_string(lhs.coeff(*r.first_difference)) + ", rhs " +
             CoeffTraits<C>::to_string(rhs.coeff(*r.first_difference));
  return r;
}

}  // namespace instanton

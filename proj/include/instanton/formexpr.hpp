#pragma once

#include <memory>
#include <string>
#include <vector>

#include "instanton/forms.hpp"
#include "instanton/rational.hpp"
#include "instanton/series.hpp"

namespace instanton {

// Expression tree over named forms evaluated at k*tau + s/2, rational
// constants, the imaginary unit, and one E2 slot. The slot stands for
// E2(tau) and is resolved only at evaluation time: holomorphically for
// exact series, to E2 - 3/(pi Im tau) numerically when asked.
class FormExpr {
 public:
  enum class Op { Form, E2Slot, Const, ImagUnit, Add, Mul, Pow };

  struct Node {
    Op op = Op::Const;
    FormName name = FormName::E2;
    Rational scaling = 1;
    int half_shift = 0;  // 0 or 1: argument k tau + half_shift/2
    Rational value = 0;
    long exponent = 1;
    std::vector<FormExpr> children;
  };

  FormExpr() : FormExpr(constant(0)) {}

  static FormExpr form(FormName name, const Rational& scaling = 1, int half_shift = 0);
  static FormExpr e2_slot();
  static FormExpr constant(const Rational& c);
  static FormExpr imaginary_unit();

  FormExpr pow(long n) const;
  friend FormExpr operator+(const FormExpr& a, const FormExpr& b);
  friend FormExpr operator-(const FormExpr& a, const FormExpr& b);
  friend FormExpr operator*(const FormExpr& a, const FormExpr& b);
  friend FormExpr operator*(const Rational& c, const FormExpr& a);
  friend FormExpr operator*(const FormExpr& a, const Rational& c) { return c * a; }
  FormExpr operator-() const { return Rational(-1) * *this; }

  const Node& node() const { return *node_; }
  bool has_e2_slot() const;
  bool has_imaginary() const;
  std::string to_string() const;

 private:
  explicit FormExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Exact q-expansion to trunc with the E2 slot filled by E2(tau). Raises
// DomainError for leaves with no exact series (the imaginary unit, half
// shifts of fractional-exponent forms).
QSeries to_series(const FormExpr& expr, const Rational& trunc, const FormTable& forms);
QSeries to_series(const FormExpr& expr, const Rational& trunc);

}  // namespace instanton

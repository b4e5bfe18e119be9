#include "instanton/formexpr.hpp"

#include <sstream>

#include "instanton/errors.hpp"

namespace instanton {

namespace {
FormExpr::Node mk(FormExpr::Op op) {
  FormExpr::Node n;
  n.op = op;
  return n;
}
}  // namespace

FormExpr FormExpr::form(FormName name, const Rational& scaling, int half_shift) {
  if (scaling <= 0) throw DomainError("form scaling must be positive");
  if (half_shift != 0 && half_shift != 1) throw DomainError("half shift must be 0 or 1");
  Node n = mk(Op::Form);
  n.name = name;
  n.scaling = scaling;
  n.half_shift = half_shift;
  return FormExpr(std::make_shared<const Node>(std::move(n)));
}

FormExpr FormExpr::e2_slot() { return FormExpr(std::make_shared<const Node>(mk(Op::E2Slot))); }

FormExpr FormExpr::constant(const Rational& c) {
  Node n = mk(Op::Const);
  n.value = c;
  return FormExpr(std::make_shared<const Node>(std::move(n)));
}

FormExpr FormExpr::imaginary_unit() { return FormExpr(std::make_shared<const Node>(mk(Op::ImagUnit))); }

FormExpr FormExpr::pow(long n) const {
  Node p = mk(Op::Pow);
  p.exponent = n;
  p.children = {*this};
  return FormExpr(std::make_shared<const Node>(std::move(p)));
}

FormExpr operator+(const FormExpr& a, const FormExpr& b) {
  FormExpr::Node n = mk(FormExpr::Op::Add);
  n.children = {a, b};
  return FormExpr(std::make_shared<const FormExpr::Node>(std::move(n)));
}

FormExpr operator-(const FormExpr& a, const FormExpr& b) { return a + Rational(-1) * b; }

FormExpr operator*(const FormExpr& a, const FormExpr& b) {
  FormExpr::Node n = mk(FormExpr::Op::Mul);
  n.children = {a, b};
  return FormExpr(std::make_shared<const FormExpr::Node>(std::move(n)));
}

FormExpr operator*(const Rational& c, const FormExpr& a) { return FormExpr::constant(c) * a; }

bool FormExpr::has_e2_slot() const {
  if (node_->op == Op::E2Slot) return true;
  for (const auto& c : node_->children)
    if (c.has_e2_slot()) return true;
  return false;
}

bool FormExpr::has_imaginary() const {
  if (node_->op == Op::ImagUnit) return true;
  for (const auto& c : node_->children)
    if (c.has_imaginary()) return true;
  return false;
}

std::string FormExpr::to_string() const {
  const Node& n = *node_;
  std::ostringstream os;
  switch (n.op) {
    case Op::Form:
      os << form_name_string(n.name) << "(";
      if (n.scaling != 1) os << instanton::to_string(n.scaling) << "*";
      os << "tau";
      if (n.half_shift) os << "+1/2";
      os << ")";
      break;
    case Op::E2Slot:
      os << "E2slot(tau)";
      break;
    case Op::Const:
      os << instanton::to_string(n.value);
      break;
    case Op::ImagUnit:
      os << "i";
      break;
    case Op::Add:
      os << "(" << n.children[0].to_string() << " + " << n.children[1].to_string() << ")";
      break;
    case Op::Mul:
      os << n.children[0].to_string() << "*" << n.children[1].to_string();
      break;
    case Op::Pow:
      os << n.children[0].to_string() << "^(" << n.exponent << ")";
      break;
  }
  return os.str();
}

namespace {

QSeries eval_exact(const FormExpr& e, const Rational& m, const FormTable& forms) {
  const auto& n = e.node();
  switch (n.op) {
    case FormExpr::Op::Form:
      if (n.half_shift == 0) return forms.get(n.name, n.scaling, m);
      // f(k tau + 1/2): twist f in its own variable, then dilate
      return forms.get(n.name, 1, m / n.scaling).half_period_shift().dilate(n.scaling);
    case FormExpr::Op::E2Slot:
      return forms.get(FormName::E2, 1, m);
    case FormExpr::Op::Const:
      return QSeries::monomial(n.value, 0, m, kDefaultDenom);
    case FormExpr::Op::ImagUnit:
      throw DomainError("the imaginary unit has no rational q-expansion");
    case FormExpr::Op::Add:
      return eval_exact(n.children[0], m, forms) + eval_exact(n.children[1], m, forms);
    case FormExpr::Op::Mul: {
      // a constant factor keeps the other side's truncation
      const auto& a = n.children[0].node();
      if (a.op == FormExpr::Op::Const) return eval_exact(n.children[1], m, forms) * a.value;
      return eval_exact(n.children[0], m, forms) * eval_exact(n.children[1], m, forms);
    }
    case FormExpr::Op::Pow:
      return eval_exact(n.children[0], m, forms).pow(n.exponent);
  }
  throw DomainError("unknown expression node");
}

}  // namespace

QSeries to_series(const FormExpr& expr, const Rational& trunc, const FormTable& forms) {
  if (trunc < -2) throw DomainError("truncation too small");
  for (int margin : {0, 1, 2, 4, 8, 16}) {
    const Rational m = std::max(trunc, Rational(0)) + margin;
    QSeries s = eval_exact(expr, m, forms);
    if (s.trunc() >= trunc) return s.truncated(trunc);
  }
  throw TruncationError("expression loses too much truncation: " + expr.to_string());
}

QSeries to_series(const FormExpr& expr, const Rational& trunc) {
  static const FormTable forms;
  return to_series(expr, trunc, forms);
}

}  // namespace instanton

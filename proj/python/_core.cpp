// Thin bindings. Exact values cross the boundary as fraction strings; the
// Python package turns them into fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "instanton/errors.hpp"
#include "instanton/forms.hpp"
#include "instanton/numeric.hpp"
#include "instanton/results.hpp"
#include "instanton/suites.hpp"

namespace py = pybind11;
using namespace instanton;

namespace {

py::dict series_dict(const QSeries& s) {
  py::list terms;
  for (const auto& [k, c] : s.terms()) terms.append(py::make_tuple(to_string(s.exponent_of(k)), to_string(c)));
  py::dict d;
  d["trunc"] = to_string(s.trunc());
  d["terms"] = terms;
  return d;
}

py::dict report_dict(const Report& r) {
  py::list items;
  for (const auto& i : r.items) {
    py::dict d;
    d["name"] = i.name;
    d["pass"] = i.pass;
    d["checked_to"] = to_string(i.checked_to);
    d["first_difference"] = i.first_difference ? py::object(py::str(to_string(*i.first_difference))) : py::none();
    d["detail"] = i.detail;
    d["seconds"] = i.seconds;
    items.append(d);
  }
  py::dict d;
  d["suite"] = r.suite;
  d["passed"] = r.passed();
  d["items"] = items;
  return d;
}

E2Mode e2_mode(const std::string& e2) {
  if (e2 == "hat") return E2Mode::anomaly;
  if (e2 == "holomorphic") return E2Mode::holomorphic;
  throw DomainError("e2 must be 'hat' or 'holomorphic'");
}

C1Class c1_class(const std::string& text) {
  const C1Tag t = parse_c1_tag(text);
  for (const auto& c : C1Class::all())
    if (c.tag == t) return c;
  throw DomainError("unknown c1 class '" + text + "'");
}

FormExpr form_or_throw(const std::string& name) {
  if (auto f = named_form(name)) return *f;
  throw DomainError("unknown form '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<NotInvertibleError>(m, "NotInvertibleError", base.ptr());

  m.def("suite_names", &suite_names);

  m.def(
      "run_suite",
      [](const std::string& name, const std::string& order, const std::string& oracle_order) {
        SuiteConfig cfg;
        cfg.order = parse_rational(order);
        cfg.oracle_order = parse_rational(oracle_order);
        Report r;
        {
          py::gil_scoped_release nogil;
          r = run_suite(name, cfg);
        }
        return report_dict(r);
      },
      py::arg("name"), py::arg("order") = "20", py::arg("oracle_order") = "6");

  m.def(
      "series",
      [](const std::string& name, const std::string& trunc, const std::string& scaling) {
        const Rational n = parse_rational(trunc);
        if (auto f = parse_form_name(name)) return series_dict(gen_form(*f, parse_rational(scaling), n));
        if (parse_rational(scaling) != 1) throw DomainError("scaling applies to base forms only");
        return series_dict(to_series(form_or_throw(name), n));
      },
      py::arg("name"), py::arg("trunc") = "20", py::arg("scaling") = "1");

  m.def(
      "ztilde",
      [](const std::string& c1, const std::string& trunc) {
        PartitionFunction z = ztilde(c1_class(c1), parse_rational(trunc));
        py::dict d = series_dict(z.series);
        d["label"] = std::string(pf_label_string(z.label));
        return d;
      },
      py::arg("c1"), py::arg("trunc") = "20");

  m.def(
      "euler_table",
      [](const std::string& cls, const std::string& max_delta, const std::string& order) {
        EulerTable t = euler_table(parse_table_class(cls), parse_rational(max_delta), parse_rational(order));
        py::list rows;
        for (const auto& r : t.rows) {
          py::dict d;
          d["delta"] = to_string(r.delta);
          d["dim"] = r.dim.get_si();
          d["euler"] = to_string(r.euler);
          if (r.betti) {
            py::list b;
            for (const auto& x : *r.betti) b.append(x.get_si());
            d["betti"] = b;
          } else {
            d["betti"] = py::none();
          }
          d["singular"] = r.singular;
          rows.append(d);
        }
        return rows;
      },
      py::arg("cls"), py::arg("max_delta"), py::arg("order") = "20");

  m.def(
      "evaluate",
      [](const std::string& name, const std::string& tau, int digits, const std::string& e2) {
        const FormExpr f = form_or_throw(name);
        PrecisionScope ps(digits + 20);
        const ComplexAP z = eval_form(f, parse_complex(tau, digits + 20), digits, e2_mode(e2));
        return py::make_tuple(z.re.str(digits), z.im.str(digits));
      },
      py::arg("name"), py::arg("tau"), py::arg("digits") = 40, py::arg("e2") = "hat");

  m.def(
      "sduality",
      [](const std::string& tau, int digits, const std::string& e2) {
        SDualityResult r;
        std::string rel;
        {
          PrecisionScope ps(digits + 20);
          const ComplexAP t = parse_complex(tau, digits + 20);
          r = sduality_check(t, digits, e2_mode(e2));
          rel = r.rel_error.str(6, std::ios_base::scientific);
        }
        py::dict d;
        d["tau"] = tau;
        d["digits"] = digits;
        d["e2"] = e2;
        d["lhs"] = r.lhs.to_string(digits);
        d["rhs"] = r.rhs.to_string(digits);
        d["rel_error"] = rel;
        d["threshold"] = r.threshold;
        d["pass"] = r.mode == E2Mode::anomaly ? py::object(py::bool_(r.pass)) : py::none();
        d["seconds"] = r.seconds;
        return d;
      },
      py::arg("tau"), py::arg("digits") = 40, py::arg("e2") = "hat");
}

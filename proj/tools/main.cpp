#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <iostream>
#include <thread>

#include "instanton/errors.hpp"
#include "instanton/numeric.hpp"
#include "instanton/results.hpp"
#include "instanton/suites.hpp"
#include "io.hpp"

using namespace instanton;
using io::json;

namespace {

// Usage errors exit 2, failed checks and runtime errors exit 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string order = "20";
  std::string oracle_order;  // empty: min(6, order)
  int digits = 40;
  std::string format = "text";
  std::string suite = "all";
  std::string cls = "odd";
  std::string max_delta;
  std::string tau;
  std::string form;
  std::string e2 = "hat";
};

Rational parse_flag_rational(const std::string& flag, const std::string& v) {
  try {
    return parse_rational(v);
  } catch (const std::exception&) {
    throw UsageError("--" + flag + ": cannot parse '" + v + "' as a rational");
  }
}

io::Format parse_fmt(const RunConfig& c) {
  try {
    return io::parse_format(c.format);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

int thread_cap() {
  const char* env = std::getenv("INSTANTON_ZETA_THREADS");
  if (!env || !*env) return std::max(1u, std::thread::hardware_concurrency());
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end || n < 1) throw UsageError("INSTANTON_ZETA_THREADS must be a positive integer");
  return static_cast<int>(n);
}

SuiteConfig suite_config(const RunConfig& c) {
  SuiteConfig s;
  s.order = parse_flag_rational("order", c.order);
  if (s.order < 1) throw UsageError("--order must be at least 1");
  s.oracle_order = c.oracle_order.empty() ? std::min(Rational(6), s.order) : parse_flag_rational("oracle-order", c.oracle_order);
  if (s.oracle_order < 0) throw UsageError("--oracle-order must be nonnegative");
  if (s.oracle_order > s.order) throw UsageError("--oracle-order must not exceed --order");
  return s;
}

ComplexAP parse_tau(const RunConfig& c) {
  if (c.tau.empty()) throw UsageError("--tau is required");
  ComplexAP tau;
  try {
    tau = parse_complex(c.tau, c.digits + 20);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (!(tau.im > 0)) throw UsageError("tau must lie in the upper half-plane (Im tau > 0)");
  if (!(tau.im > NumericConfig{}.min_imag))
    throw UsageError("Im tau is below the configured minimum " + std::to_string(NumericConfig{}.min_imag));
  return tau;
}

E2Mode parse_e2(const RunConfig& c) {
  if (c.e2 == "hat") return E2Mode::anomaly;
  if (c.e2 == "holomorphic") return E2Mode::holomorphic;
  throw UsageError("--e2 must be 'hat' or 'holomorphic'");
}

int cmd_verify(const RunConfig& c) {
  const SuiteConfig sc = suite_config(c);
  const io::Format fmt = parse_fmt(c);
  std::vector<std::string> names;
  if (c.suite == "all") {
    names = suite_names();
  } else {
    if (std::find(suite_names().begin(), suite_names().end(), c.suite) == suite_names().end())
      throw UsageError("unknown suite '" + c.suite + "'");
    names = {c.suite};
  }
  const auto t0 = std::chrono::steady_clock::now();
  // bounded fan-out; results are collected in suite order
  const std::size_t cap = static_cast<std::size_t>(thread_cap());
  std::vector<Report> reports(names.size());
  for (std::size_t start = 0; start < names.size(); start += cap) {
    std::vector<std::future<Report>> batch;
    for (std::size_t k = start; k < std::min(names.size(), start + cap); ++k)
      batch.push_back(std::async(cap > 1 ? std::launch::async : std::launch::deferred,
                                 [&, k] { return run_suite(names[k], sc); }));
    for (std::size_t k = 0; k < batch.size(); ++k) reports[start + k] = batch[k].get();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();

  if (fmt == io::Format::json) {
    json suites = json::array();
    for (const auto& r : reports) suites.push_back(io::to_json(r));
    std::cout << json{{"order", to_string(sc.order)},
                      {"oracle_order", to_string(sc.oracle_order)},
                      {"passed", ok},
                      {"seconds", seconds},
                      {"suites", suites}}
                     .dump(2)
              << "\n";
  } else if (fmt == io::Format::csv) {
    std::cout << io::report_csv(reports);
  } else {
    std::cout << io::report_text(reports);
    std::cout << (ok ? "all identities pass" : "FAILURES") << " (order " << to_string(sc.order) << ", oracle order "
              << to_string(sc.oracle_order) << ", " << seconds << " s)\n";
  }
  if (!ok) {
    for (const auto& r : reports)
      if (const auto* f = r.first_failure()) {
        std::cerr << "first failure: [" << r.suite << "] " << f->name << ": " << f->detail << "\n";
        break;
      }
  }
  return ok ? 0 : 1;
}

int cmd_table(const RunConfig& c) {
  const io::Format fmt = parse_fmt(c);
  TableClass cls;
  try {
    cls = parse_table_class(c.cls);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const Rational order = parse_flag_rational("order", c.order);
  if (order < 0) throw UsageError("--order must be nonnegative");
  const Rational max_delta = c.max_delta.empty() ? order + 1 : parse_flag_rational("max-delta", c.max_delta);
  const EulerTable t = euler_table(cls, max_delta, order);  // TruncationError -> exit 1
  if (fmt == io::Format::json)
    std::cout << io::to_json(t).dump(2) << "\n";
  else if (fmt == io::Format::csv)
    std::cout << io::table_csv(t);
  else
    std::cout << io::table_text(t);
  return 0;
}

// Named forms and the assembled partition functions.
FormExpr lookup_form(const std::string& name) {
  if (auto f = named_form(name)) return *f;
  throw UsageError("unknown form '" + name + "'");
}

int cmd_eval(const RunConfig& c) {
  const io::Format fmt = parse_fmt(c);
  if (c.form.empty()) throw UsageError("--form is required");
  if (c.digits < 10) throw UsageError("--digits must be at least 10");
  const FormExpr f = lookup_form(c.form);
  if (c.tau.empty()) {
    // exact q-expansion, E2 slot filled holomorphically
    const Rational order = parse_flag_rational("order", c.order);
    const QSeries s = to_series(f, order);
    if (fmt == io::Format::json) {
      json j = io::series_json(s);
      j["form"] = c.form;
      std::cout << j.dump(2) << "\n";
    } else if (fmt == io::Format::csv) {
      std::cout << "exponent,coeff\n";
      for (const auto& [k, v] : s.terms()) std::cout << to_string(s.exponent_of(k)) << ',' << to_string(v) << '\n';
    } else {
      std::cout << c.form << " = " << s.to_string(1 << 20) << "\n";
    }
    return 0;
  }
  const ComplexAP tau = parse_tau(c);
  const E2Mode mode = parse_e2(c);
  const ComplexAP v = eval_form(f, tau, c.digits, mode);
  const std::string value = v.to_string(c.digits);
  if (fmt == io::Format::json)
    std::cout << json{{"form", c.form}, {"tau", c.tau}, {"digits", c.digits}, {"e2", c.e2}, {"value", value}}.dump(2)
              << "\n";
  else if (fmt == io::Format::csv)
    std::cout << "form,tau,digits,value\n" << c.form << ',' << io::csv_field(c.tau) << ',' << c.digits << ','
              << io::csv_field(value) << '\n';
  else
    std::cout << c.form << "(" << c.tau << ") = " << value << "\n";
  return 0;
}

int cmd_sduality(const RunConfig& c) {
  const io::Format fmt = parse_fmt(c);
  if (c.digits < 10) throw UsageError("--digits must be at least 10");
  const ComplexAP tau = parse_tau(c);
  const E2Mode mode = parse_e2(c);
  const SDualityResult r = sduality_check(tau, c.digits, mode);
  const bool diagnostic = mode == E2Mode::holomorphic;
  std::ostringstream rel;
  rel.precision(6);
  rel << r.rel_error;
  const int shown = std::min(c.digits, 30);
  if (fmt == io::Format::json) {
    json j{{"tau", c.tau},
           {"digits", c.digits},
           {"e2", c.e2},
           {"lhs", r.lhs.to_string(shown)},
           {"rhs", r.rhs.to_string(shown)},
           {"rel_error", rel.str()},
           {"threshold", r.threshold},
           {"pass", diagnostic ? json(nullptr) : json(r.pass)},
           {"seconds", r.seconds}};
    std::cout << j.dump(2) << "\n";
  } else if (fmt == io::Format::csv) {
    std::cout << "tau,digits,e2,lhs,rhs,rel_error,threshold,pass,seconds\n"
              << io::csv_field(c.tau) << ',' << c.digits << ',' << c.e2 << ',' << io::csv_field(r.lhs.to_string(shown))
              << ',' << io::csv_field(r.rhs.to_string(shown)) << ',' << rel.str() << ',' << r.threshold << ','
              << (diagnostic ? "" : (r.pass ? "true" : "false")) << ',' << r.seconds << '\n';
  } else {
    std::cout << "tau = " << c.tau << "\n"
              << "Z_SU2(-1/tau)                  = " << r.lhs.to_string(shown) << "\n"
              << "-2^-6 (tau/i)^-6 Z_SO3(tau)    = " << r.rhs.to_string(shown) << "\n"
              << "relative error                 = " << rel.str() << "\n";
    if (diagnostic)
      std::cout << "holomorphic E2: residual reported, no verdict\n";
    else
      std::cout << (r.pass ? "PASS" : "FAIL") << " (threshold " << r.threshold << ", " << r.seconds << " s)\n";
  }
  return diagnostic || r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series, wall-crossing generating functions and partition functions of a rational elliptic surface"};
  app.require_subcommand(1);
  RunConfig c;
  auto common = [&](CLI::App* s) {
    s->add_option("--order", c.order, "q-order (rational, default 20)");
    s->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto* verify = app.add_subcommand("verify", "run identity suites");
  common(verify);
  verify->add_option("--oracle-order", c.oracle_order, "order for the direct wall-sum oracle (default min(6, order))");
  verify->add_option("--suite", c.suite, "suite name or 'all'");
  auto* table = app.add_subcommand("table", "Euler characteristic / Betti table");
  common(table);
  table->add_option("--class", c.cls, "v0, even, odd, lambda0, lambdaEven, lambdaOdd");
  table->add_option("--max-delta", c.max_delta, "largest Delta (rational, default order + 1)");
  auto* eval = app.add_subcommand("eval", "evaluate a form numerically at tau, or expand it exactly");
  common(eval);
  eval->add_option("--form", c.form, "form name (theta3, E4, Z_SO3, Z_w0, ...)");
  eval->add_option("--tau", c.tau, "point in the upper half-plane, e.g. 0.3+1.1i; omit for the q-expansion");
  eval->add_option("--digits", c.digits, "significant digits (default 40)");
  eval->add_option("--e2", c.e2, "E2 slot: hat (default) or holomorphic");
  auto* sd = app.add_subcommand("sduality", "numeric S-duality check");
  common(sd);
  sd->add_option("--tau", c.tau, "point in the upper half-plane, e.g. i or 0.3+1.1i");
  sd->add_option("--digits", c.digits, "significant digits (default 40)");
  sd->add_option("--e2", c.e2, "E2 slot: hat (default) or holomorphic (diagnostic)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (*verify) return cmd_verify(c);
    if (*table) return cmd_table(c);
    if (*eval) return cmd_eval(c);
    if (*sd) return cmd_sduality(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

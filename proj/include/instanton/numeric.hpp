#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <string>
#include <string_view>

#include "instanton/formexpr.hpp"
#include "instanton/series.hpp"

namespace instanton {

using Real = boost::multiprecision::mpfr_float;

// Complex number over MPFR reals. Precision follows the ambient default
// precision in force when the parts are created (see PrecisionScope).
struct ComplexAP {
  Real re, im;

  ComplexAP() : re(0), im(0) {}
  ComplexAP(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  static ComplexAP i() { return {Real(0), Real(1)}; }

  ComplexAP& operator+=(const ComplexAP& o);
  ComplexAP& operator-=(const ComplexAP& o);
  ComplexAP& operator*=(const ComplexAP& o);
  ComplexAP& operator/=(const ComplexAP& o);
  friend ComplexAP operator+(ComplexAP a, const ComplexAP& b) { return a += b; }
  friend ComplexAP operator-(ComplexAP a, const ComplexAP& b) { return a -= b; }
  friend ComplexAP operator*(ComplexAP a, const ComplexAP& b) { return a *= b; }
  friend ComplexAP operator/(ComplexAP a, const ComplexAP& b) { return a /= b; }
  ComplexAP operator-() const { return {-re, -im}; }

  Real abs() const;
  ComplexAP pow(long n) const;
  std::string to_string(int digits) const;
};

ComplexAP exp(const ComplexAP& z);

// While alive, new MPFR values use about `digits` decimal digits. Holds a
// process-wide lock: the ambient precision is global state, so numeric
// evaluations are serialized.
class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

// Accepts "i", "2i", "-0.2+0.9i", "0.3 + 1.1 i", "1.0"; no check on the
// half-plane here.
ComplexAP parse_complex(std::string_view text, int digits);

enum class E2Mode { holomorphic, anomaly };  // anomaly: E2 - 3/(pi Im tau)

struct NumericConfig {
  double min_imag = 0.05;      // evaluation points closer to the real axis are rejected
  long max_terms = 200000;     // per leaf series
  int guard_digits = 15;       // working precision above the target
  int growth_margin_bits = 8;  // extra factor 2^bits on every tail bound
};

// Value of expr at tau to about `digits` significant digits.
ComplexAP eval_form(const FormExpr& expr, const ComplexAP& tau, int digits, E2Mode mode = E2Mode::anomaly,
                    const NumericConfig& cfg = {});

// Sum of a truncated exact series at q = exp(2 pi i tau); q^e = exp(2 pi i e tau).
ComplexAP eval_qseries(const QSeries& s, const ComplexAP& tau, int digits);

struct SDualityResult {
  ComplexAP tau;
  ComplexAP lhs;  // Z_SU2(-1/tau)
  ComplexAP rhs;  // -2^-6 (tau/i)^-6 Z_SO3(tau)
  Real rel_error;
  double threshold = 0;
  bool pass = false;
  E2Mode mode = E2Mode::anomaly;
  double seconds = 0;
};

// Relative error |lhs - rhs| / |rhs|; pass iff below `threshold`
// (default 10^(-digits + 10)). In holomorphic mode the result is a diagnostic.
SDualityResult sduality_check(const ComplexAP& tau, int digits, E2Mode mode = E2Mode::anomaly,
                              double threshold = -1, const NumericConfig& cfg = {});

}  // namespace instanton

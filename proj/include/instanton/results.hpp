#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "instanton/formexpr.hpp"
#include "instanton/report.hpp"
#include "instanton/series.hpp"
#include "instanton/surface.hpp"

namespace instanton {

enum class PFLabel {
  Zt_v0,
  Zt_vEven,
  Zt_vOdd,
  Zt_f_v0,
  Zt_f_vEven,
  Zt_f_vOdd,
  Zt_0,
  Zt_even,
  Zt_odd,
  Zt_v0_int,
  Z_SU2,
  Z_SO3
};
enum class Provenance { pipeline, closed_form, relation };

std::string_view pf_label_string(PFLabel l);
std::string_view provenance_string(Provenance p);

struct PartitionFunction {
  PFLabel label;
  QSeries series;
  Provenance provenance;
  std::optional<FormExpr> expr;  // set for closed forms; E2 slot marks the anomaly
};

// lim_{t->1} q^-1 sum_Delta P(M(c1, Delta), t) q^Delta, known to q^trunc.
PartitionFunction ztilde(const C1Class& c1, const Rational& trunc);

// Closed forms. The E2(tau) multiplying the P weight is the E2 slot; every
// other E2 is holomorphic.
FormExpr ztilde_closed_form(C1Tag c1);      // last line of each Z~_v computation
FormExpr theorem_closed_form(C1Tag lambda);  // Z~_0, Z~_even, Z~_odd as in the theorem
FormExpr inv_eta_power(const Rational& scaling, long power);  // eta(k tau)^-power
FormExpr z_su2_form();
FormExpr z_so3_form();
// Z_w0 (sign +1) and Z_w1 (sign -1); contain the imaginary unit, numeric only.
FormExpr z_w_form(int sign);
// Base forms by name, E2hat, and the partition functions above (Zt_0,
// Zt_even, Zt_odd, Zt_v0, Z_SU2, Z_SO3, Z_w0, Z_w1).
std::optional<FormExpr> named_form(std::string_view name);

// Both limit formulas for B0, B1 and the ruled-surface factor G(1, q), plus
// the A-sums at t = 1 in divisor-sum and E2 form.
Report check_limit_lemmas(const Rational& trunc);

// ztilde against the closed forms, including the intermediate lines and the
// two auxiliary theta identities used to pass between them.
Report compare_closed_forms(const Rational& trunc);

struct TheoremAssembly {
  Report report;
  PartitionFunction z0, zeven, zodd;
  PartitionFunction zf_v0, zf_even, zf_odd, z_v0_int;
};
TheoremAssembly assemble_theorem(const Rational& trunc);

struct GaugeFunctions {
  PartitionFunction su2, so3;
};
GaugeFunctions gauge_partition_functions(const Rational& trunc);

// Integrality of the Z~ coefficients. Every Euler-characteristic coefficient
// must be an integer; coefficients of singular moduli (c1 = 0, even Delta)
// are listed separately, and any non-integer off that set fails.
struct IntegralityEntry {
  std::string function;
  Rational delta;
  Rational value;
};
struct IntegralityReport {
  Report report;
  std::vector<IntegralityEntry> singular_nonintegral;
};
IntegralityReport check_integrality(const Rational& trunc);

// Vanishing below dimension 0 in the smooth classes.
Report check_vanishing(const Rational& trunc);

enum class TableClass { v0, even, odd, lambda0, lambdaEven, lambdaOdd };
TableClass parse_table_class(std::string_view text);
std::string_view table_class_string(TableClass c);

struct EulerRow {
  Rational delta;
  Integer dim;  // 4 Delta - 3, metadata only
  Rational euler;
  std::optional<std::vector<Integer>> betti;  // b_0..b_{2 dim}, smooth v-classes only
  bool singular = false;
  friend bool operator==(const EulerRow&, const EulerRow&) = default;
};
struct EulerTable {
  TableClass cls;
  std::vector<EulerRow> rows;
  friend bool operator==(const EulerTable&, const EulerTable&) = default;
};

// Rows on the class's Delta grid up to max_delta, which must not exceed
// order + 1 (Z~ known to q^order).
EulerTable euler_table(TableClass cls, const Rational& max_delta, const Rational& order);

}  // namespace instanton

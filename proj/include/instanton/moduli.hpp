#pragma once

#include "instanton/lattice.hpp"
#include "instanton/report.hpp"
#include "instanton/series.hpp"
#include "instanton/surface.hpp"

namespace instanton {

enum class SurfaceKind { X, Sigma1 };

// Z_t(S, w) = prod_i (1 - t^i w)^(-b_2i(S)) expanded under w = t^j q^k.
PolySeries zeta_factor(SurfaceKind surface, int u_t_power, int u_q_power, const Rational& trunc);
// prod_{a >= 1} Z_t(S, t^(alpha a + beta) q^a)^power.
PolySeries zeta_product(SurfaceKind surface, int alpha, int beta, int power, const Rational& trunc);
// prod_a Z_t(X, t^-1 u^a)^2 with u = t^2 q.
PolySeries zeta_x_squared(const Rational& trunc);

enum class VacuumKind { F, G };
// (t^2 - 1)(t - 1) times F(t,q) or G(t,q); both are polynomial in t.
PolySeries vacuum_numerator(VacuumKind kind, const Rational& trunc);
TSeries vacuum_series(VacuumKind kind, const Rational& trunc);

// A_1..A_4 with u = t^2 q already substituted; (t^k - t^-k)/(t - 1) is a
// Laurent polynomial, so these are too.
PolySeries a_sum(int i, const Rational& trunc);

// Series in u rewritten in q under u = t^2 q.
PolySeries substitute_u(const PolySeries& in_u);
PolySeries substitute_u(const QSeries& in_u);
// (Theta_D8|shift)(0, u^2) with u = t^2 q.
PolySeries d8_theta_u2(const ShiftVector& shift, const Rational& trunc);

// The denominator shared by every wall term, 2t(t^2 - 1)(t - 1).
LaurentPoly wall_denominator();

// (t^2 - 1)(t - 1) * F B0^(8-n) B1^n / prod (1 - u^a)^16.
PolySeries mg_numerator(const C1Class& c1, const Rational& trunc);
TSeries mg_series(const C1Class& c1, const Rational& trunc);

// The closed wall-crossing assembly of sum_Delta P(M(c1, Delta), t) q^Delta.
TSeries proposition_series(const C1Class& c1, const Rational& trunc);

// Direct enumeration of the xi-sums over H^2 + l/2, for comparison with
// proposition_series. Meant for small truncations.
TSeries wall_sum_oracle(const C1Class& c1, const Rational& trunc);

Report compare_wall_oracle(const Rational& trunc);
// Polynomial, nonnegative integral, palindromic of degree 4 Delta - 3, zero
// below dimension 0, constant term 1 otherwise.
Report check_smoothness(const C1Class& c1, const Rational& trunc);

}  // namespace instanton

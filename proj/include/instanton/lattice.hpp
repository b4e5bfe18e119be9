#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "instanton/rational.hpp"
#include "instanton/report.hpp"
#include "instanton/series.hpp"

namespace instanton {

using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<std::vector<Integer>>;

// Positive-definite integral lattice given by its Gram matrix in a chosen
// basis. Optionally carries the basis vectors in an ambient Q^n with the
// standard product, which lets shifts be written in ambient coordinates.
class IntegralLattice {
 public:
  IntegralLattice(std::string name, IntMatrix gram, std::vector<RatVector> embedding = {});

  // Gram [2]: Theta_A1(0,u) = sum u^(n^2).
  static IntegralLattice A1();
  static IntegralLattice Zn(int n);
  // {x in Z^8 : sum x even}, basis x_i - x_(i+1) (i < 7), x_7 - x_8, x_7 + x_8.
  static IntegralLattice D8();
  // Bourbaki simple roots in R^8.
  static IntegralLattice E8();

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(gram_.size()); }
  const IntMatrix& gram() const { return gram_; }
  const std::vector<RatVector>& embedding() const { return embedding_; }

  Rational pairing(const RatVector& x, const RatVector& y) const;
  Rational norm(const RatVector& x) const { return pairing(x, x); }
  // Basis coordinates of an ambient vector in the rational span.
  RatVector from_ambient(const RatVector& v) const;
  Integer determinant() const;

 private:
  std::string name_;
  IntMatrix gram_;
  std::vector<RatVector> embedding_;
};

// Offset of the coset L + offset, in basis coordinates.
struct ShiftVector {
  RatVector offset;

  static ShiftVector zero(int rank) { return {RatVector(static_cast<std::size_t>(rank), Rational(0))}; }
  // Representative with every coordinate in [0, 1).
  ShiftVector reduced() const;
  ShiftVector operator+(const ShiftVector& o) const;
  bool operator==(const ShiftVector& o) const { return reduced().offset == o.reduced().offset; }
};

// Calls fn(point, norm) for every point of L + shift with norm <= max_norm.
// Exact: LDL^T in rationals, then integer Fincke-Pohst bounds.
void enumerate_shell(const IntegralLattice& lattice, const ShiftVector& shift, const Rational& max_norm,
                     const std::function<void(const RatVector&, const Rational&)>& fn);

// (Theta_L|shift)(0,u) = sum over L + shift of u^((n,n)/2), known to u^trunc.
QSeries shifted_theta(const IntegralLattice& lattice, const ShiftVector& shift, const Rational& trunc);
QSeries lattice_theta(const IntegralLattice& lattice, const Rational& trunc);

// B0(t,u) = sum_{n in Z} u^(n^2) t^n and B1(t,u) = the same over Z + 1/2,
// as series in u with Laurent polynomial coefficients.
PolySeries a1_theta_with_char(bool half_shift, const Rational& trunc);
// Jacobi triple product forms of the same two series.
PolySeries a1_theta_product(bool half_shift, const Rational& trunc);

// D8 coset offsets, in D8 basis coordinates: a*(e1/2) + b*p + c*q, where
// p = (e1+e3+e5+e8)/2 and q = (e7+e8)/2.
ShiftVector d8_shift(bool e1_half, bool p, bool q);

// Theta_Z(0,u) = sum u^(n^2/2), Theta_Z(1/2,u) with the sign (-1)^n, and
// the coset Z + 1/2.
QSeries z_theta(const Rational& trunc);
QSeries z_theta_signed(const Rational& trunc);
QSeries z_theta_half(const Rational& trunc);

// Every coset identity for D8 in Z^8 coordinates, plus
// (Theta_D8 + Theta_D8|q)(0,u^2) = B0(1,u)^8.
Report verify_d8_decompositions(const Rational& trunc);

}  // namespace instanton

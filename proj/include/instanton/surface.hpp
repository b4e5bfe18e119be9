#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "instanton/lattice.hpp"
#include "instanton/rational.hpp"
#include "instanton/report.hpp"

namespace instanton {

// Classes in H^2 of the rational elliptic surface, coordinates on the basis
// H, C_1, ..., C_9.
using SurfaceClass = std::array<Rational, 10>;

struct SurfaceData {
  std::vector<int> betti_X{1, 0, 10, 0, 1};
  std::vector<int> betti_Sigma1{1, 0, 2, 0, 1};
  int euler_X = 12;

  SurfaceClass H() const;
  SurfaceClass C(int i) const;  // 1..9
  SurfaceClass f() const;       // 3H - sum C_i
  SurfaceClass g() const;       // H - C_1
  SurfaceClass K() const;       // -f
  SurfaceClass e(int i) const;  // 1..8
  SurfaceClass p() const;       // (e1 + e3 + e5 + e8)/2
  SurfaceClass q() const;       // (e7 + e8)/2

  // Intersection form diag(1, -1, ..., -1).
  static Rational pairing(const SurfaceClass& x, const SurfaceClass& y);
  // Sum of d_i e_i for D8 basis coordinates d.
  SurfaceClass from_d8(const RatVector& d) const;
};

SurfaceClass operator+(const SurfaceClass& a, const SurfaceClass& b);
SurfaceClass operator-(const SurfaceClass& a, const SurfaceClass& b);
SurfaceClass operator*(const Rational& c, const SurfaceClass& a);
bool is_integral(const SurfaceClass& x);

enum class C1Tag { v0, vEven, vOdd };

struct C1Class {
  C1Tag tag;
  std::string name;
  RatVector d8;          // representative in D8 basis coordinates
  Rational grid_offset;  // Delta lies in grid_offset + Z
  int blowup_count;      // number of i in 2..9 with (l, C_i) odd

  static C1Class v0();
  static C1Class vEven();
  static C1Class vOdd();
  static const std::vector<C1Class>& all();

  SurfaceClass representative(const SurfaceData& s) const { return s.from_d8(d8); }
  // l/2 as a D8 coset offset.
  ShiftVector half_shift() const;
};

std::string_view c1_tag_string(C1Tag t);
C1Tag parse_c1_tag(std::string_view text);

// One coset of <f,g> + D8 inside H^2 + l/2: xi = a f + b g + delta with
// a in a0 + Z, b in b0 + Z, delta in D8 + offset.
struct GlueCoset {
  Rational a0, b0;
  ShiftVector offset;
};
// Found by testing all 256 * 4 classes of (1/2)(<f,g> + D8) for
// integrality of xi - l/2 in the H, C_i basis. ConfigurationError unless
// exactly four survive, which is the unimodularity count
// |disc <f,g>| * |disc D8| / index^2 = 4 * 4 / 16 = 1.
std::vector<GlueCoset> coset_system(const SurfaceData& s, const C1Class& c1);

int blowup_parity_count(const SurfaceData& s, const SurfaceClass& l);

// Intersection numbers of f, g, the e_i Gram matrix against D8, the
// representatives' parity counts, and the index-4 overlattice.
Report verify_surface_data();

}  // namespace instanton

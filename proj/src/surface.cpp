#include "instanton/surface.hpp"

#include "instanton/errors.hpp"

namespace instanton {

namespace {

SurfaceClass zero_class() {
  SurfaceClass x;
  x.fill(Rational(0));
  return x;
}

}  // namespace

SurfaceClass operator+(const SurfaceClass& a, const SurfaceClass& b) {
  SurfaceClass r;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

SurfaceClass operator-(const SurfaceClass& a, const SurfaceClass& b) {
  SurfaceClass r;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

SurfaceClass operator*(const Rational& c, const SurfaceClass& a) {
  SurfaceClass r;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_integral(const SurfaceClass& x) {
  for (const auto& c : x)
    if (!is_integer(c)) return false;
  return true;
}

SurfaceClass SurfaceData::H() const {
  SurfaceClass x = zero_class();
  x[0] = 1;
  return x;
}

SurfaceClass SurfaceData::C(int i) const {
  if (i < 1 || i > 9) throw DomainError("exceptional class index out of range");
  SurfaceClass x = zero_class();
  x[static_cast<std::size_t>(i)] = 1;
  return x;
}

SurfaceClass SurfaceData::f() const {
  SurfaceClass x = Rational(3) * H();
  for (int i = 1; i <= 9; ++i) x = x - C(i);
  return x;
}

SurfaceClass SurfaceData::g() const { return H() - C(1); }
SurfaceClass SurfaceData::K() const { return Rational(-1) * f(); }

SurfaceClass SurfaceData::e(int i) const {
  if (i >= 1 && i <= 7) return C(9 - i) - C(10 - i);
  if (i == 8) return H() - C(1) - C(2) - C(3);
  throw DomainError("D8 root index out of range");
}

SurfaceClass SurfaceData::p() const { return frac(1, 2) * (e(1) + e(3) + e(5) + e(8)); }
SurfaceClass SurfaceData::q() const { return frac(1, 2) * (e(7) + e(8)); }

Rational SurfaceData::pairing(const SurfaceClass& x, const SurfaceClass& y) {
  Rational s = x[0] * y[0];
  for (std::size_t i = 1; i < x.size(); ++i) s -= x[i] * y[i];
  return s;
}

SurfaceClass SurfaceData::from_d8(const RatVector& d) const {
  if (d.size() != 8) throw DomainError("D8 coordinates must have 8 entries");
  SurfaceClass x = zero_class();
  for (int i = 0; i < 8; ++i)
    if (d[static_cast<std::size_t>(i)] != 0) x = x + d[static_cast<std::size_t>(i)] * e(i + 1);
  return x;
}

C1Class C1Class::v0() { return {C1Tag::v0, "v0", RatVector(8, Rational(0)), 0, 0}; }

C1Class C1Class::vEven() {
  RatVector d(8, Rational(0));
  d[6] = d[7] = 1;
  return {C1Tag::vEven, "even", d, 0, 0};
}

C1Class C1Class::vOdd() {
  RatVector d(8, Rational(0));
  d[0] = 1;
  return {C1Tag::vOdd, "odd", d, frac(1, 2), 2};
}

const std::vector<C1Class>& C1Class::all() {
  static const std::vector<C1Class> v{v0(), vEven(), vOdd()};
  return v;
}

ShiftVector C1Class::half_shift() const {
  ShiftVector s{d8};
  for (auto& c : s.offset) c /= 2;
  return s.reduced();
}

std::string_view c1_tag_string(C1Tag t) {
  switch (t) {
    case C1Tag::v0:
      return "v0";
    case C1Tag::vEven:
      return "even";
    case C1Tag::vOdd:
      return "odd";
  }
  return "?";
}

C1Tag parse_c1_tag(std::string_view text) {
  if (text == "v0" || text == "0") return C1Tag::v0;
  if (text == "even" || text == "vEven") return C1Tag::vEven;
  if (text == "odd" || text == "vOdd") return C1Tag::vOdd;
  throw DomainError("unknown c1 class '" + std::string(text) + "'");
}

int blowup_parity_count(const SurfaceData& s, const SurfaceClass& l) {
  int n = 0;
  for (int i = 2; i <= 9; ++i) {
    Rational v = SurfaceData::pairing(l, s.C(i));
    if (!is_integer(v)) throw DomainError("class is not integral");
    if (mpz_odd_p(v.get_num_mpz_t())) ++n;
  }
  return n;
}

std::vector<GlueCoset> coset_system(const SurfaceData& s, const C1Class& c1) {
  const SurfaceClass half_l = frac(1, 2) * c1.representative(s);
  std::vector<GlueCoset> out;
  for (int mask = 0; mask < 256; ++mask) {
    RatVector d(8);
    for (int i = 0; i < 8; ++i) d[static_cast<std::size_t>(i)] = ((mask >> i) & 1) ? frac(1, 2) : Rational(0);
    const SurfaceClass delta = s.from_d8(d);
    for (int ai = 0; ai < 2; ++ai)
      for (int bi = 0; bi < 2; ++bi) {
        const Rational a0 = frac(ai, 2), b0 = frac(bi, 2);
        if (is_integral(a0 * s.f() + b0 * s.g() + delta - half_l)) out.push_back({a0, b0, ShiftVector{d}});
      }
  }
  if (out.size() != 4)
    throw ConfigurationError("coset system of <f,g> + D8 in H^2 + l/2 has " + std::to_string(out.size()) +
                             " classes, expected 4");
  return out;
}

Report verify_surface_data() {
  Report rep;
  rep.suite = "surface";
  const SurfaceData s;
  auto item = [&](std::string name, bool pass, std::string detail = {}) {
    IdentityResult r;
    r.name = std::move(name);
    r.pass = pass;
    r.checked_to = 0;
    if (!pass) r.detail = std::move(detail);
    rep.items.push_back(std::move(r));
  };
  const auto P = SurfaceData::pairing;
  item("(f^2) = (g^2) = 0, (f,g) = 2", P(s.f(), s.f()) == 0 && P(s.g(), s.g()) == 0 && P(s.f(), s.g()) == 2);
  item("(K_X^2) = 0 and (K_X, g) = -2", P(s.K(), s.K()) == 0 && P(s.K(), s.g()) == -2);
  bool perp = true;
  for (int i = 1; i <= 8; ++i) perp = perp && P(s.e(i), s.f()) == 0 && P(s.e(i), s.g()) == 0;
  item("e_1..e_8 are orthogonal to f and g", perp);
  const IntegralLattice d8 = IntegralLattice::D8();
  bool gram = true;
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) gram = gram && -P(s.e(i), s.e(j)) == Rational(d8.gram()[i - 1][j - 1]);
  item("negated Gram matrix of e_1..e_8 equals the D8 Gram matrix", gram);
  item("p and q have the expected D8 coordinates",
       s.p() == s.from_d8(d8_shift(false, true, false).offset) && s.q() == s.from_d8(d8_shift(false, false, true).offset));
  for (const auto& c : C1Class::all()) {
    const SurfaceClass l = c.representative(s);
    const Rational norm = -P(l, l);  // (l^2)_*
    const bool grid = is_integer(norm / 4 - c.grid_offset);
    item("class " + c.name + ": blow-up parity count " + std::to_string(c.blowup_count) + " and Delta grid",
         blowup_parity_count(s, l) == c.blowup_count && grid && P(l, s.f()) == 0 && P(l, s.g()) == 0);
    try {
      const auto cosets = coset_system(s, c);
      const Rational disc_fg = P(s.f(), s.f()) * P(s.g(), s.g()) - P(s.f(), s.g()) * P(s.f(), s.g());
      const Integer index(static_cast<long>(cosets.size()));
      item("class " + c.name + ": four cosets of <f,g> + D8, unimodular overlattice",
           abs(disc_fg) * Rational(d8.determinant()) == Rational(index * index));
    } catch (const ConfigurationError& e) {
      item("class " + c.name + ": four cosets of <f,g> + D8, unimodular overlattice", false, e.what());
    }
  }
  return rep;
}

}  // namespace instanton

#include <doctest.h>

#include <cmath>
#include <map>

#include "generators.hpp"
#include "instanton/forms.hpp"
#include "instanton/lattice.hpp"
#include "instanton/moduli.hpp"
#include "oracles.hpp"

using namespace instanton;

namespace {

LaurentPoly tp(const Rational& e) { return LaurentPoly::monomial(1, e); }

// Determinant of a small integer matrix by cofactor expansion.
long det(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      sub.push_back(row);
    }
    d += (c % 2 ? -1 : 1) * m[0][c] * det(sub);
  }
  return d;
}

struct RandomLattice {
  IntMatrix gram;
  std::vector<int> box;  // |x_i| <= sqrt(N (G^-1)_ii), rounded up
};

// Random positive-definite Gram matrix B^T B with a small nonsingular B.
RandomLattice random_lattice(gen::Gen& g, int r, long max_norm) {
  std::vector<std::vector<long>> b(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r)));
  do {
    for (auto& row : b)
      for (auto& x : row) x = g.range(-2, 2);
  } while (det(b) == 0);
  std::vector<std::vector<long>> gl(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r), 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) gl[i][j] += b[k][i] * b[k][j];
  RandomLattice out;
  out.gram.assign(static_cast<std::size_t>(r), std::vector<Integer>(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out.gram[i][j] = gl[i][j];
  const long d = det(gl);
  for (int i = 0; i < r; ++i) {
    std::vector<std::vector<long>> minor;
    for (int a = 0; a < r; ++a) {
      if (a == i) continue;
      std::vector<long> row;
      for (int c = 0; c < r; ++c)
        if (c != i) row.push_back(gl[a][c]);
      minor.push_back(row);
    }
    const double inv_ii = r == 1 ? 1.0 / d : static_cast<double>(det(minor)) / d;
    out.box.push_back(static_cast<int>(std::ceil(std::sqrt(max_norm * inv_ii))) + 1);
  }
  return out;
}

// Exhaustive box search of counts by norm for L + s, s in {0, 1/2}^r.
std::map<Rational, long> box_counts(const IntMatrix& gram, const std::vector<int>& half, const Rational& max_norm,
                                   const std::vector<int>& box) {
  const int r = static_cast<int>(gram.size());
  std::map<Rational, long> out;
  std::vector<int> x(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) x[i] = -box[i];
  for (;;) {
    // doubled coordinates y = 2x + half
    Integer n4 = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        n4 += gram[i][j] * (2 * x[i] + half[i]) * (2 * x[j] + half[j]);
    Rational norm = frac(n4, 4);
    if (norm <= max_norm) ++out[norm];
    int i = 0;
    while (i < r && x[i] == box[i]) {
      x[i] = -box[i];
      ++i;
    }
    if (i == r) break;
    ++x[i];
  }
  return out;
}

}  // namespace

TEST_SUITE("lattices") {
  TEST_CASE("D8 and E8 theta series") {
    QSeries d8 = lattice_theta(IntegralLattice::D8(), 2);
    CHECK(d8.coeff(0) == 1);
    CHECK(d8.coeff(1) == 112);
    CHECK(d8.coeff(2) == 1136);
    CHECK(IntegralLattice::D8().determinant() == 4);
    CHECK(IntegralLattice::E8().determinant() == 1);
    CHECK(lattice_theta(IntegralLattice::E8(), 5) == gen_form(FormName::E4, 1, 5));
  }

  TEST_CASE("D8 cosets against brute-force enumeration in Z^8") {
    const int n = 4;
    auto even = oracle::d8_coset_counts(false, 2 * n);
    auto odd = oracle::d8_coset_counts(true, 2 * n);
    QSeries d8 = lattice_theta(IntegralLattice::D8(), n);
    QSeries sp = shifted_theta(IntegralLattice::D8(), d8_shift(false, true, false), n);
    for (int k = 0; k <= 2 * n; ++k) {
      CHECK(d8.coeff(frac(k, 2)) == even[static_cast<std::size_t>(k)]);
      CHECK(sp.coeff(frac(k, 2)) == odd[static_cast<std::size_t>(k)]);
    }
    // frozen from the oracle: spinor coset 128 u + 1024 u^2 + ...
    CHECK(odd[2] == 128);
    CHECK(odd[4] == 1024);
    CHECK(even[2] == 112);
    CHECK(even[4] == 1136);
    // after u -> u^2, the form used in the wall terms
    CHECK(sp.dilate(2).coeff(2) == 128);
  }

  TEST_CASE("E8 against its D8 + spinor decomposition") {
    auto c = oracle::e8_counts(3);
    const long frozen[] = {1, 240, 2160, 6720};
    for (int k = 0; k <= 3; ++k) CHECK(c[static_cast<std::size_t>(k)] == frozen[k]);
    QSeries e8 = lattice_theta(IntegralLattice::E8(), 3);
    for (int k = 0; k <= 3; ++k) CHECK(e8.coeff(k) == c[static_cast<std::size_t>(k)]);
  }

  TEST_CASE("A1 half shift") {
    ShiftVector half{{frac(1, 2)}};
    QSeries s = shifted_theta(IntegralLattice::A1(), half, 3);
    CHECK(s.valuation() == frac(1, 4));
    CHECK(s.coeff(frac(1, 4)) == 2);
    CHECK(s.coeff(frac(9, 4)) == 2);
  }

  TEST_CASE("translation by a lattice vector changes nothing") {
    gen::Gen g(51);
    const auto l = IntegralLattice::D8();
    for (int i = 0; i < 8; ++i) {
      ShiftVector s = d8_shift(g.coin(), g.coin(), g.coin());
      ShiftVector v = ShiftVector::zero(8);
      for (auto& x : v.offset) x = g.range(-2, 2);
      CHECK(s + v == s);
      CHECK(shifted_theta(l, s + v, 4) == shifted_theta(l, s, 4));
    }
  }

  TEST_CASE("shell enumeration is complete on random small lattices") {
    gen::Gen g(52);
    for (int trial = 0; trial < 30; ++trial) {
      const int r = static_cast<int>(g.range(1, 3));
      const long max_norm = g.range(2, 10);
      RandomLattice rl = random_lattice(g, r, max_norm);
      IntegralLattice l("random", rl.gram);
      std::vector<int> half(static_cast<std::size_t>(r));
      ShiftVector s = ShiftVector::zero(r);
      for (int i = 0; i < r; ++i) {
        half[i] = g.coin() ? 1 : 0;
        s.offset[i] = frac(half[i], 2);
      }
      std::map<Rational, long> got;
      enumerate_shell(l, s, Rational(max_norm), [&](const RatVector&, const Rational& n) { ++got[n]; });
      auto want = box_counts(rl.gram, half, max_norm, rl.box);
      CHECK(got == want);
    }
  }
}

TEST_SUITE("A1 with character") {
  TEST_CASE("B0 and B1 leading terms") {
    PolySeries b0 = a1_theta_with_char(false, 4);
    CHECK(b0.coeff(0) == LaurentPoly(1));
    CHECK(b0.coeff(1) == tp(1) + tp(-1));
    CHECK(b0.coeff(2) == LaurentPoly());
    CHECK(b0.coeff(4) == tp(2) + tp(-2));
    PolySeries b1 = a1_theta_with_char(true, 3);
    CHECK(b1.valuation() == frac(1, 4));
    CHECK(b1.coeff(frac(1, 4)) == tp(frac(1, 2)) + tp(frac(-1, 2)));
    CHECK(b1.denom() % 4 == 0);
  }

  TEST_CASE("product formula equals the sum") {
    for (bool half : {false, true}) CHECK(a1_theta_product(half, 10) == a1_theta_with_char(half, 10));
  }

  TEST_CASE("at t = 1 the character sums are A1 thetas") {
    const auto a1 = IntegralLattice::A1();
    CHECK(eval_at_one(a1_theta_with_char(false, 12)) == shifted_theta(a1, ShiftVector::zero(1), 12));
    CHECK(eval_at_one(a1_theta_with_char(true, 12)) == shifted_theta(a1, ShiftVector{{frac(1, 2)}}, 12));
  }
}

TEST_SUITE("D8 decompositions") {
  TEST_CASE("every line passes at u-order 12") {
    Report r = verify_d8_decompositions(12);
    CHECK(r.items.size() >= 7);
    for (const auto& i : r.items) {
      INFO(i.name << ": " << i.detail);
      CHECK(i.pass);
    }
  }

  TEST_CASE("bridge identity in terms of B0") {
    QSeries lhs = (lattice_theta(IntegralLattice::D8(), 6) + shifted_theta(IntegralLattice::D8(), d8_shift(false, false, true), 6))
                      .dilate(2);
    QSeries b0 = eval_at_one(a1_theta_with_char(false, 12));
    CHECK(lhs == b0.pow(8).truncated(12));
  }
}

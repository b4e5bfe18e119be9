#include "instanton/lattice.hpp"

#include <chrono>
#include <unordered_map>

#include "instanton/errors.hpp"

namespace instanton {

namespace {

using i128 = __int128;

IntMatrix gram_of(const std::vector<RatVector>& basis) {
  const std::size_t r = basis.size();
  IntMatrix g(r, std::vector<Integer>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < basis[i].size(); ++k) s += basis[i][k] * basis[j][k];
      if (!is_integer(s)) throw ConfigurationError("lattice basis has a non-integral pairing");
      g[i][j] = s.get_num();
    }
  return g;
}

RatVector unit(int n, int i, const Rational& c = 1) {
  RatVector v(static_cast<std::size_t>(n), Rational(0));
  v[static_cast<std::size_t>(i)] = c;
  return v;
}

// Solves A x = b exactly; A square and invertible.
RatVector solve(std::vector<RatVector> a, RatVector b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw ConfigurationError("singular Gram matrix");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

std::int64_t isqrt64(i128 x) {
  if (x < 0) return -1;
  auto r = static_cast<std::int64_t>(__builtin_sqrtl(static_cast<long double>(x)));
  while (static_cast<i128>(r) * r > x) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Integer form of the Fincke-Pohst recursion. Points are N / M with
// N_i = M * n_i; the quadratic form on N is V / (T * S^2 * M^2) where
// V = sum_i Q_i (S N_i + C_i)^2 and C_i = sum_{j>i} Mu_ij N_j.
struct Enumerator {
  int r = 0;
  std::int64_t M = 1;
  std::int64_t S = 1;
  Integer scale;  // T * S^2 * M^2
  std::vector<std::int64_t> Q;
  std::vector<std::vector<std::int64_t>> Mu;
  std::vector<std::int64_t> residue;  // N_i mod M
  i128 budget = 0;

  Enumerator(const IntegralLattice& lat, const ShiftVector& shift, const Rational& max_norm) {
    r = lat.rank();
    if (static_cast<int>(shift.offset.size()) != r) throw DomainError("shift dimension does not match the lattice rank");
    std::vector<RatVector> q(static_cast<std::size_t>(r), RatVector(static_cast<std::size_t>(r)));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) q[i][j] = Rational(lat.gram()[i][j]);
    for (int i = 0; i < r; ++i) {
      if (q[i][i] <= 0) throw ConfigurationError("Gram matrix of " + lat.name() + " is not positive definite");
      for (int j = i + 1; j < r; ++j) {
        q[j][i] = q[i][j];
        q[i][j] /= q[i][i];
      }
      for (int k = i + 1; k < r; ++k)
        for (int l = k; l < r; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
    Integer T = 1, Sz = 1, Mz = 1;
    for (int i = 0; i < r; ++i) {
      T = lcm(T, q[i][i].get_den());
      for (int j = i + 1; j < r; ++j) Sz = lcm(Sz, q[i][j].get_den());
      Mz = lcm(Mz, shift.offset[i].get_den());
    }
    S = to_int64(Sz);
    M = to_int64(Mz);
    Q.resize(r);
    Mu.assign(r, std::vector<std::int64_t>(r, 0));
    residue.resize(r);
    for (int i = 0; i < r; ++i) {
      Q[i] = to_int64(Integer(q[i][i] * T));
      for (int j = i + 1; j < r; ++j) Mu[i][j] = to_int64(Integer(q[i][j] * Sz));
      Rational s = shift.offset[i] * Mz;
      residue[i] = to_int64(Integer(s.get_num())) % M;
      if (residue[i] < 0) residue[i] += M;
    }
    scale = T * Sz * Sz * Mz * Mz;
    Integer b = floor(max_norm * scale);
    if (b < 0) {
      budget = -1;
    } else {
      if (b > Integer("4000000000000000000")) throw DomainError("lattice enumeration bound too large");
      budget = static_cast<i128>(to_int64(b));
    }
  }

  template <class Leaf>
  void run(Leaf&& leaf) {
    if (budget < 0) return;
    std::vector<std::int64_t> N(static_cast<std::size_t>(r), 0);
    recurse(r - 1, budget, 0, N, leaf);
  }

  template <class Leaf>
  void recurse(int i, i128 remaining, i128 used, std::vector<std::int64_t>& N, Leaf& leaf) {
    std::int64_t C = 0;
    for (int j = i + 1; j < r; ++j) C += Mu[i][j] * N[j];
    const std::int64_t rad = isqrt64(remaining / Q[i]);
    std::int64_t lo = ceil_div(-rad - C, S);
    const std::int64_t hi = floor_div(rad - C, S);
    // first lo with lo = residue mod M
    std::int64_t off = (residue[i] - lo) % M;
    if (off < 0) off += M;
    lo += off;
    for (std::int64_t n = lo; n <= hi; n += M) {
      const i128 y = static_cast<i128>(S) * n + C;
      const i128 term = static_cast<i128>(Q[i]) * y * y;
      if (term > remaining) continue;
      N[i] = n;
      if (i == 0)
        leaf(N, used + term);
      else
        recurse(i - 1, remaining - term, used + term, N, leaf);
    }
    N[i] = 0;
  }
};

QSeries one_dim_theta(const Rational& trunc, bool half, bool sign) {
  QSeries s(8, trunc);
  for (std::int64_t m = 0;; ++m) {
    Rational n = half ? frac(2 * m + 1, 2) : Rational(m);
    Rational e = n * n / 2;
    if (e > trunc) break;
    Rational c = (!half && m == 0) ? 1 : 2;
    if (sign && m % 2 != 0) c = -c;
    s.add_term(e, c);
  }
  return s;
}

}  // namespace

IntegralLattice::IntegralLattice(std::string name, IntMatrix gram, std::vector<RatVector> embedding)
    : name_(std::move(name)), gram_(std::move(gram)), embedding_(std::move(embedding)) {
  const std::size_t r = gram_.size();
  if (r == 0) throw ConfigurationError("lattice of rank 0");
  for (std::size_t i = 0; i < r; ++i) {
    if (gram_[i].size() != r) throw ConfigurationError("Gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw ConfigurationError("Gram matrix is not symmetric");
  }
  if (!embedding_.empty() && gram_of(embedding_) != gram_)
    throw ConfigurationError("embedding of " + name_ + " disagrees with its Gram matrix");
  // principal minors, via the pivots of the symmetric elimination
  std::vector<RatVector> q(r, RatVector(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) q[i][j] = Rational(gram_[i][j]);
  for (std::size_t i = 0; i < r; ++i) {
    if (q[i][i] <= 0) throw ConfigurationError("Gram matrix of " + name_ + " is not positive definite");
    for (std::size_t k = i + 1; k < r; ++k) {
      Rational f = q[k][i] / q[i][i];
      for (std::size_t l = i; l < r; ++l) q[k][l] -= f * q[i][l];
    }
  }
}

IntegralLattice IntegralLattice::A1() { return IntegralLattice("A1", {{Integer(2)}}); }

IntegralLattice IntegralLattice::Zn(int n) {
  std::vector<RatVector> b;
  for (int i = 0; i < n; ++i) b.push_back(unit(n, i));
  return IntegralLattice("Z" + std::to_string(n), gram_of(b), b);
}

IntegralLattice IntegralLattice::D8() {
  std::vector<RatVector> b;
  for (int i = 0; i < 7; ++i) {
    RatVector v = unit(8, i);
    v[static_cast<std::size_t>(i + 1)] = -1;
    b.push_back(v);
  }
  RatVector last = unit(8, 6);
  last[7] = 1;
  b.push_back(last);
  return IntegralLattice("D8", gram_of(b), b);
}

IntegralLattice IntegralLattice::E8() {
  std::vector<RatVector> b;
  RatVector a1(8, frac(-1, 2));
  a1[0] = frac(1, 2);
  a1[7] = frac(1, 2);
  b.push_back(a1);
  RatVector a2 = unit(8, 0);
  a2[1] = 1;
  b.push_back(a2);
  for (int i = 0; i < 6; ++i) {
    RatVector v = unit(8, i + 1);
    v[static_cast<std::size_t>(i)] = -1;
    b.push_back(v);
  }
  return IntegralLattice("E8", gram_of(b), b);
}

Rational IntegralLattice::pairing(const RatVector& x, const RatVector& y) const {
  const std::size_t r = gram_.size();
  if (x.size() != r || y.size() != r) throw DomainError("vector dimension does not match the lattice rank");
  Rational s = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j)
      if (y[j] != 0) s += x[i] * Rational(gram_[i][j]) * y[j];
  }
  return s;
}

RatVector IntegralLattice::from_ambient(const RatVector& v) const {
  if (embedding_.empty()) throw ConfigurationError(name_ + " has no ambient embedding");
  const std::size_t r = gram_.size();
  std::vector<RatVector> g(r, RatVector(r));
  RatVector bv(r, Rational(0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) g[i][j] = Rational(gram_[i][j]);
    for (std::size_t k = 0; k < v.size(); ++k) bv[i] += embedding_[i][k] * v[k];
  }
  RatVector c = solve(g, bv);
  for (std::size_t k = 0; k < v.size(); ++k) {
    Rational s = 0;
    for (std::size_t i = 0; i < r; ++i) s += c[i] * embedding_[i][k];
    if (s != v[k]) throw DomainError("vector is not in the span of " + name_);
  }
  return c;
}

Integer IntegralLattice::determinant() const {
  const std::size_t r = gram_.size();
  std::vector<RatVector> q(r, RatVector(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) q[i][j] = Rational(gram_[i][j]);
  Rational det = 1;
  for (std::size_t i = 0; i < r; ++i) {
    det *= q[i][i];
    for (std::size_t k = i + 1; k < r; ++k) {
      Rational f = q[k][i] / q[i][i];
      for (std::size_t l = i; l < r; ++l) q[k][l] -= f * q[i][l];
    }
  }
  return det.get_num();
}

ShiftVector ShiftVector::reduced() const {
  ShiftVector s = *this;
  for (auto& c : s.offset) c -= Rational(floor(c));
  return s;
}

ShiftVector ShiftVector::operator+(const ShiftVector& o) const {
  if (o.offset.size() != offset.size()) throw DomainError("shift dimensions differ");
  ShiftVector s = *this;
  for (std::size_t i = 0; i < offset.size(); ++i) s.offset[i] += o.offset[i];
  return s.reduced();
}

void enumerate_shell(const IntegralLattice& lattice, const ShiftVector& shift, const Rational& max_norm,
                     const std::function<void(const RatVector&, const Rational&)>& fn) {
  Enumerator en(lattice, shift, max_norm);
  RatVector point(static_cast<std::size_t>(en.r));
  const Integer mz(static_cast<long>(en.M));
  en.run([&](const std::vector<std::int64_t>& N, i128 v) {
    for (int i = 0; i < en.r; ++i) point[i] = frac(Integer(static_cast<long>(N[i])), mz);
    fn(point, frac(Integer(static_cast<long>(v)), en.scale));
  });
}

QSeries shifted_theta(const IntegralLattice& lattice, const ShiftVector& shift, const Rational& trunc) {
  if (trunc < 0) throw DomainError("theta truncation must be nonnegative");
  Enumerator en(lattice, shift, 2 * trunc);
  // exponent V / (2 * scale); on the 1/(2 M^2) grid the index is V / (T S^2)
  const std::int64_t denom = 2 * en.M * en.M;
  const std::int64_t step = to_int64(Integer(en.scale / (en.M * en.M)));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(en.budget / step + 1), 0);
  en.run([&](const std::vector<std::int64_t>&, i128 v) { ++counts[static_cast<std::size_t>(v / step)]; });
  QSeries s(denom, trunc);
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] != 0) s.add_index(static_cast<std::int64_t>(k), Rational(Integer(std::to_string(counts[k]))));
  return s;
}

QSeries lattice_theta(const IntegralLattice& lattice, const Rational& trunc) {
  return shifted_theta(lattice, ShiftVector::zero(lattice.rank()), trunc);
}

PolySeries a1_theta_with_char(bool half_shift, const Rational& trunc) {
  if (trunc < 0) throw DomainError("theta truncation must be nonnegative");
  PolySeries s(4, trunc);
  // n = m (+1/2), exponent n^2, character t^n = s^(2n)
  for (std::int64_t m = 0;; ++m) {
    const std::int64_t twice_n = half_shift ? 2 * m + 1 : 2 * m;
    Rational e = frac(twice_n * twice_n, 4);
    if (e > trunc) break;
    LaurentPoly c = LaurentPoly::half_monomial(1, static_cast<int>(twice_n));
    if (twice_n != 0) c += LaurentPoly::half_monomial(1, static_cast<int>(-twice_n));
    s.add_term(e, c);
  }
  return s;
}

PolySeries a1_theta_product(bool half_shift, const Rational& trunc) {
  PolySeries s(4, trunc);
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
  const std::int64_t top = to_int64(floor(trunc)) + 1;
  if (!half_shift) {
    // prod (1 - u^(2m)) (1 + t u^(2m-1)) (1 + t^-1 u^(2m-1))
    s.add_term(0, LaurentPoly(1));
    for (std::int64_t m = 1; 2 * m - 1 <= top; ++m) {
      s.mul_binomial_power(LaurentPoly(1), Rational(2 * m), 1);
      s.mul_binomial_power(-t, Rational(2 * m - 1), 1);
      s.mul_binomial_power(-tinv, Rational(2 * m - 1), 1);
    }
  } else {
    // u^(1/4) (t^(1/2) + t^(-1/2)) prod (1 - u^(2m)) (1 + t u^(2m)) (1 + t^-1 u^(2m))
    s.add_term(frac(1, 4), LaurentPoly::half_monomial(1, 1) + LaurentPoly::half_monomial(1, -1));
    for (std::int64_t m = 1; 2 * m <= top; ++m) {
      s.mul_binomial_power(LaurentPoly(1), Rational(2 * m), 1);
      s.mul_binomial_power(-t, Rational(2 * m), 1);
      s.mul_binomial_power(-tinv, Rational(2 * m), 1);
    }
  }
  return s;
}

ShiftVector d8_shift(bool e1_half, bool p, bool q) {
  ShiftVector s = ShiftVector::zero(8);
  auto add = [&](std::initializer_list<int> idx) {
    for (int i : idx) s.offset[static_cast<std::size_t>(i - 1)] += frac(1, 2);
  };
  if (e1_half) add({1});
  if (p) add({1, 3, 5, 8});
  if (q) add({7, 8});
  return s.reduced();
}

QSeries z_theta(const Rational& trunc) { return one_dim_theta(trunc, false, false); }
QSeries z_theta_signed(const Rational& trunc) { return one_dim_theta(trunc, false, true); }
QSeries z_theta_half(const Rational& trunc) { return one_dim_theta(trunc, true, false); }

Report verify_d8_decompositions(const Rational& trunc) {
  if (trunc < 1) throw DomainError("D8 verification needs truncation >= 1");
  using clock = std::chrono::steady_clock;
  Report rep;
  rep.suite = "d8";
  const IntegralLattice d8 = IntegralLattice::D8();
  auto timed = [&](IdentityResult r, clock::time_point t0) {
    r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    rep.items.push_back(std::move(r));
  };

  // the coset offsets written in Z^8 coordinates
  {
    auto t0 = clock::now();
    IdentityResult r;
    r.name = "D8 coset offsets match their Z^8 coordinates";
    r.checked_to = 0;
    const RatVector half_e1 = {frac(1, 2), frac(-1, 2), 0, 0, 0, 0, 0, 0};
    const RatVector p = {frac(1, 2), frac(-1, 2), frac(1, 2), frac(-1, 2), frac(1, 2), frac(-1, 2), frac(1, 2), frac(1, 2)};
    const RatVector q = {0, 0, 0, 0, 0, 0, 1, 0};
    r.pass = ShiftVector{d8.from_ambient(half_e1)} == d8_shift(true, false, false) &&
             ShiftVector{d8.from_ambient(p)} == d8_shift(false, true, false) &&
             ShiftVector{d8.from_ambient(q)} == d8_shift(false, false, true) && d8.determinant() == 4;
    if (!r.pass) r.detail = "basis coordinates of e1/2, p, q disagree with the Z^8 description";
    timed(r, t0);
  }

  const QSeries z = z_theta(trunc), zs = z_theta_signed(trunc), zh = z_theta_half(trunc);
  const Rational half = frac(1, 2);
  const QSeries z8 = z.pow(8), zs8 = zs.pow(8), zh8 = zh.pow(8);
  const QSeries mixed_2_6 = z.pow(6) * zh.pow(2) * half;
  const QSeries mixed_6_2 = z.pow(2) * zh.pow(6) * half;

  struct Line {
    const char* name;
    bool e1, p, q;
    QSeries rhs;
  };
  const std::vector<Line> lines = {
      {"Theta_D8 = (Theta_Z^8 + Theta_Z(1/2)^8)/2", false, false, false, (z8 + zs8) * half},
      {"Theta_D8|q = (Theta_Z^8 - Theta_Z(1/2)^8)/2", false, false, true, (z8 - zs8) * half},
      {"Theta_D8|p = (Theta_Z|1/2)^8/2", false, true, false, zh8 * half},
      {"Theta_D8|(p+q) = (Theta_Z|1/2)^8/2", false, true, true, zh8 * half},
      {"Theta_D8|(e1/2) = Theta_Z^6 (Theta_Z|1/2)^2/2", true, false, false, mixed_2_6},
      {"Theta_D8|(e1/2+q) = Theta_Z^6 (Theta_Z|1/2)^2/2", true, false, true, mixed_2_6},
      {"Theta_D8|(e1/2+p) = Theta_Z^2 (Theta_Z|1/2)^6/2", true, true, false, mixed_6_2},
      {"Theta_D8|(e1/2+p+q) = Theta_Z^2 (Theta_Z|1/2)^6/2", true, true, true, mixed_6_2},
  };
  for (const auto& line : lines) {
    auto t0 = clock::now();
    QSeries lhs = shifted_theta(d8, d8_shift(line.e1, line.p, line.q), trunc);
    timed(compare_series(line.name, lhs, line.rhs, trunc), t0);
  }

  {
    auto t0 = clock::now();
    QSeries lhs = (lattice_theta(d8, trunc / 2) + shifted_theta(d8, d8_shift(false, false, true), trunc / 2)).dilate(2);
    QSeries b0 = eval_at_one(a1_theta_with_char(false, trunc));
    timed(compare_series("(Theta_D8 + Theta_D8|q)(0,u^2) = B0(1,u)^8", lhs, b0.pow(8), trunc), t0);
  }
  for (bool half_shift : {false, true}) {
    auto t0 = clock::now();
    timed(compare_series(half_shift ? "B1 sum = triple product" : "B0 sum = triple product",
                         a1_theta_with_char(half_shift, trunc), a1_theta_product(half_shift, trunc), trunc),
          t0);
  }
  return rep;
}

}  // namespace instanton

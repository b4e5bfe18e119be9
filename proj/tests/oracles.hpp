#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// library: counts come from direct enumeration and products from schoolbook
// polynomial multiplication over plain integers.

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <vector>

namespace oracle {

using Int = mpz_class;
using Poly = std::vector<Int>;  // coefficients of q^0..q^n

inline Int sigma(int k, long n) {
  Int s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) {
      Int p = 1;
      for (int i = 0; i < k; ++i) p *= d;
      s += p;
    }
  return s;
}

inline Int sigma1_odd(long n) {
  Int s = 0;
  for (long d = 1; d <= n; d += 2)
    if (n % d == 0) s += d;
  return s;
}

inline Poly mul(const Poly& a, const Poly& b, std::size_t n) {
  Poly c(n + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

// prod_{m=1..n} (1 - q^m)^power, power >= 0, coefficients of q^0..q^n.
inline Poly euler_product(int power, std::size_t n) {
  Poly r(n + 1, 0);
  r[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    Poly f(n + 1, 0);
    f[0] = 1;
    f[m] = -1;
    for (int p = 0; p < power; ++p) r = mul(r, f, n);
  }
  return r;
}

// 1 / a for a[0] = +-1, by long division.
inline Poly reciprocal(const Poly& a, std::size_t n) {
  Poly b(n + 1, 0);
  b[0] = a[0];  // a[0] is its own inverse
  for (std::size_t k = 1; k <= n; ++k) {
    Int acc = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * b[k - j];
    b[k] = -acc * a[0];
  }
  return b;
}

// Number of x in Z^dim with x.x = n for n = 0..n_max, by enumerating the
// box |x_i| <= sqrt(n_max).
inline std::vector<long> sum_of_squares_counts(int dim, int n_max) {
  int r = 0;
  while ((r + 1) * (r + 1) <= n_max) ++r;
  std::vector<long> count(static_cast<std::size_t>(n_max) + 1, 0);
  std::vector<int> x(static_cast<std::size_t>(dim), -r);
  for (;;) {
    int norm = 0;
    for (int v : x) norm += v * v;
    if (norm <= n_max) ++count[static_cast<std::size_t>(norm)];
    int i = 0;
    while (i < dim && x[static_cast<std::size_t>(i)] == r) x[static_cast<std::size_t>(i++)] = -r;
    if (i == dim) break;
    ++x[static_cast<std::size_t>(i)];
  }
  return count;
}

// Vectors y in Z^8 with all y_i of the given parity and sum y = 0 mod 4 (so
// y/2 has even coordinate sum), counted by norm (y.y)/4 up to max_norm.
// even parity: D8 (scaled by 2); odd parity: one spinor coset of D8.
inline std::vector<long> d8_coset_counts(bool odd, int max_norm) {
  const int r = 2 * static_cast<int>(std::sqrt(static_cast<double>(max_norm))) + 1;
  std::vector<long> count(static_cast<std::size_t>(max_norm) + 1, 0);
  std::array<int, 8> y{};
  std::vector<int> vals;
  for (int v = -r; v <= r; ++v)
    if ((std::abs(v) % 2 == 1) == odd) vals.push_back(v);
  std::array<std::size_t, 8> idx{};
  for (;;) {
    int sum = 0, norm4 = 0;
    for (int i = 0; i < 8; ++i) {
      y[static_cast<std::size_t>(i)] = vals[idx[static_cast<std::size_t>(i)]];
      sum += y[static_cast<std::size_t>(i)];
      norm4 += y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    }
    if (((sum % 4) + 4) % 4 == 0 && norm4 % 4 == 0 && norm4 / 4 <= max_norm) ++count[static_cast<std::size_t>(norm4 / 4)];
    int i = 0;
    while (i < 8 && idx[static_cast<std::size_t>(i)] + 1 == vals.size()) idx[static_cast<std::size_t>(i++)] = 0;
    if (i == 8) break;
    ++idx[static_cast<std::size_t>(i)];
  }
  return count;
}

// E8 = D8 + (D8 + spinor), norms even; returns counts of norm 2n at index n.
inline std::vector<long> e8_counts(int n_max) {
  auto a = d8_coset_counts(false, 2 * n_max);
  auto b = d8_coset_counts(true, 2 * n_max);
  std::vector<long> out(static_cast<std::size_t>(n_max) + 1, 0);
  for (int n = 0; n <= n_max; ++n) out[static_cast<std::size_t>(n)] = a[static_cast<std::size_t>(2 * n)] + b[static_cast<std::size_t>(2 * n)];
  return out;
}

// A_i(1, q) = sum over m, n > 0 of 2k q^e with (k, e) read off the
// definitions: (t^k - t^-k)/(t - 1) -> 2k at t = 1.
inline Poly a_sum_at_one(int i, std::size_t n) {
  Poly r(n + 1, 0);
  for (long m = 1; m <= static_cast<long>(n); ++m)
    for (long k = 1; k <= static_cast<long>(n); ++k) {
      long e = 0, w = 0;
      switch (i) {
        case 1: e = 4 * m * k, w = 2 * m; break;
        case 2: e = 2 * m * (2 * k - 1), w = 2 * m; break;
        case 3: e = (2 * m - 1) * 2 * k, w = 2 * m - 1; break;
        default: e = (2 * m - 1) * (2 * k - 1), w = 2 * m - 1; break;
      }
      if (e <= static_cast<long>(n)) r[static_cast<std::size_t>(e)] += 2 * w;
    }
  return r;
}

}  // namespace oracle

#include <chrono>

#include "instanton/errors.hpp"
#include "instanton/forms.hpp"
#include "instanton/lattice.hpp"

namespace instanton {

namespace {

// sum_n (sum over d | n with n/d odd of w(d) d) q^n
QSeries odd_cofactor_sum(std::int64_t n_max, const Rational& trunc, bool sign_by_d) {
  QSeries s(kDefaultDenom, trunc);
  for (std::int64_t d = 1; d <= n_max; ++d)
    for (std::int64_t k = 1; d * k <= n_max; k += 2) s.add_term(d * k, Rational((sign_by_d && d % 2 != 0) ? -d : d));
  return s;
}

}  // namespace

Report verify_section1(const Rational& trunc, const FormTable& forms) {
  if (trunc < 1) throw DomainError("identity suite needs truncation >= 1");
  using clock = std::chrono::steady_clock;
  Report rep;
  rep.suite = "identities";
  const Rational N = trunc;
  const std::int64_t n_max = to_int64(floor(N));
  auto g = [&](FormName f, const Rational& k = 1) { return forms.get(f, k, N); };
  auto run = [&](const std::string& name, auto&& lhs_fn, auto&& rhs_fn) {
    auto t0 = clock::now();
    IdentityResult r = compare_series(name, QSeries(lhs_fn()), QSeries(rhs_fn()), N);
    r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    rep.items.push_back(std::move(r));
  };
  const Rational r24 = frac(1, 24);

  using F = FormName;
  // weight-2 relations
  run("e1 = -(1/6)(-E2(tau) + 2E2(2tau))", [&] { return g(F::e1); },
      [&] { return (g(F::E2, 2) * 2 - g(F::E2)) * frac(-1, 6); });
  run("F = -(1/24)(E2(tau) - 3E2(2tau) + 2E2(4tau))", [&] { return g(F::F); },
      [&] { return (g(F::E2) - g(F::E2, 2) * 3 + g(F::E2, 4) * 2) * -r24; });
  run("sum d q^n (n/d odd) = (E2(2tau) - E2(tau))/24", [&] { return odd_cofactor_sum(n_max, N, false); },
      [&] { return (g(F::E2, 2) - g(F::E2)) * r24; });
  run("sum (-1)^d d q^n (n/d odd) = (E2(tau) - 5E2(2tau) + 4E2(4tau))/24",
      [&] { return odd_cofactor_sum(n_max, N, true); },
      [&] { return (g(F::E2) - g(F::E2, 2) * 5 + g(F::E2, 4) * 4) * r24; });

  // e1 in terms of thetas, Theta and F
  const QSeries th = g(F::BigTheta);
  const QSeries th4 = th.pow(4);
  const QSeries f16 = g(F::F) * 16;
  run("-6e1 = (theta3^4 + theta4^4)/2", [&] { return g(F::e1) * -6; },
      [&] { return (g(F::theta3).pow(4) + g(F::theta4).pow(4)) * frac(1, 2); });
  run("-6e1 = Theta^4 + 16F", [&] { return g(F::e1) * -6; }, [&] { return th4 + f16; });
  run("theta4(2tau)^4 = Theta^4 - 16F", [&] { return g(F::theta4, 2).pow(4); }, [&] { return th4 - f16; });
  run("theta2(2tau)^4 = 16F", [&] { return g(F::theta2, 2).pow(4); }, [&] { return f16; });
  run("theta2^8 = 256 Theta^4 F", [&] { return g(F::theta2).pow(8); }, [&] { return th4 * g(F::F) * 256; });
  run("theta2^4 = theta3^4 - theta4^4", [&] { return g(F::theta2).pow(4); },
      [&] { return g(F::theta3).pow(4) - g(F::theta4).pow(4); });

  // E8
  const QSeries theta_sum8 = (g(F::theta2).pow(8) + g(F::theta3).pow(8) + g(F::theta4).pow(8)) * frac(1, 2);
  run("(theta2^8 + theta3^8 + theta4^8)/2 = E4", [&] { return theta_sum8; }, [&] { return g(F::E4); });
  run("Theta_E8 = E4", [&] { return lattice_theta(IntegralLattice::E8(), N); }, [&] { return g(F::E4); });

  // weights of the three orbits
  const QSeries t2 = g(F::theta2, 2), t3 = g(F::theta3, 2), t4 = g(F::theta4, 2);
  run("P0 = (theta2(2tau)^8 + theta3(2tau)^8 + theta4(2tau)^8)/2", [&] { return g(F::P0); },
      [&] { return (t2.pow(8) + t3.pow(8) + t4.pow(8)) * frac(1, 2); });
  run("Peven/135 = (theta2(2tau)^8 + theta3(2tau)^8 - theta4(2tau)^8)/2",
      [&] { return g(F::Peven) * frac(1, 135); }, [&] { return (t2.pow(8) + t3.pow(8) - t4.pow(8)) * frac(1, 2); });
  run("Podd/120 = (theta2(2tau)^6 theta3(2tau)^2 + theta2(2tau)^2 theta3(2tau)^6)/2",
      [&] { return g(F::Podd) * frac(1, 120); },
      [&] { return (t2.pow(6) * t3.pow(2) + t2.pow(2) * t3.pow(6)) * frac(1, 2); });

  // the P weights against their divisor sums
  {
    auto sigma3 = divisor_sigma(3, 2 * n_max + 1);
    QSeries even(kDefaultDenom, N), odd(kDefaultDenom, N);
    for (std::int64_t n = 1; frac(n, 2) <= N; ++n) {
      QSeries& target = (n % 2 == 0) ? even : odd;
      target.add_term(frac(n, 2), Rational(240 * sigma3[static_cast<std::size_t>(n)]));
    }
    for (std::int64_t n = 1; 2 * n <= n_max; ++n) even.add_term(2 * n, Rational(-240 * sigma3[static_cast<std::size_t>(n)]));
    run("P0 = E4(2tau)", [&] { return g(F::P0); }, [&] { return g(F::E4, 2); });
    run("Peven = sum over even n of 240 sigma3(n) q^(n/2) - E4(2tau) + 1", [&] { return g(F::Peven); },
        [&] { return even; });
    run("Podd = sum over odd n of 240 sigma3(n) q^(n/2)", [&] { return g(F::Podd); }, [&] { return odd; });
  }
  return rep;
}

Report verify_section1(const Rational& trunc) {
  const FormTable forms;
  return verify_section1(trunc, forms);
}

}  // namespace instanton

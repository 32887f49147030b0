#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <spinlangevin/equilibrium.hpp>
#include <spinlangevin/ohmic.hpp>

#include <cmath>
#include <numbers>

using namespace spinlangevin;

namespace {

const SpinSystem hot_sys{0.5, 1.0, 8.0};
const BathSpec hot_bath = BathSpec::ohmic(5.0, 1e6);
const ThermalEnv hot_env{10.0, 1.0, 1.0};

OhmicDerived hot(double mz = 0.18998) {
  const double mxy = transverse_moment(hot_sys, mz);
  return derive_ohmic(hot_sys, hot_bath, mz, std::sqrt(0.6) * mxy, std::sqrt(0.4) * mxy);
}

}  // namespace

// Reference values: tests/oracles/closed_forms.py (mpmath, 50 digits).
TEST_CASE("derived parameters against the high-precision oracle") {
  const auto d = hot();
  CHECK(d.omega_tilde == doctest::Approx(412173.80381864425529).epsilon(1e-14));
  CHECK(d.tau_r == doctest::Approx(1.2770612593315229252e-6).epsilon(1e-14));
  CHECK(d.A * d.tau_r == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d.B == d.omega_tilde);
  CHECK(std::cos(d.phi) * std::cos(d.phi) + std::sin(d.phi) * std::sin(d.phi) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.rho == doctest::Approx(d.mxy).epsilon(1e-14));
}

TEST_CASE("undamped and unpolarized limits") {
  auto d = derive_ohmic(hot_sys, BathSpec::ohmic(0.0, 1e6), 0.3, 0.1, 0.2);
  CHECK(d.omega_tilde == 8.0);
  CHECK(std::isinf(d.tau_r));
  CHECK(d.A == 0.0);

  d = derive_ohmic(hot_sys, hot_bath, 1e-14, 0.1, 0.2);
  CHECK(d.A == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(d.B == doctest::Approx(8.0).epsilon(1e-6));
  d = derive_ohmic(hot_sys, hot_bath, 0.0, 0.1, 0.2);
  CHECK(std::isinf(d.tau_r));
  CHECK(d.B == 8.0);
}

TEST_CASE("initial moment larger than the transverse budget is rejected") {
  CHECK_THROWS_AS(derive_ohmic(hot_sys, hot_bath, 0.5, 0.8, 0.0), DomainError);
  CHECK_THROWS_AS(derive_ohmic(hot_sys, BathSpec::drude(1.0, 1.0), 0.1, 0.0, 0.0), DomainError);
}

TEST_CASE("mean moments") {
  const auto d = hot();
  const auto [x0, y0] = mean_moments(d, 0.0);
  CHECK(x0 == doctest::Approx(std::sqrt(0.6) * d.mxy).epsilon(1e-14));
  CHECK(y0 == doctest::Approx(std::sqrt(0.4) * d.mxy).epsilon(1e-14));
  for (int k = 0; k <= 200; ++k) {
    const double t = 5.0 * d.tau_r * k / 200.0;
    const auto [x, y] = mean_moments(d, t);
    const double expect = d.rho * d.rho * std::exp(-2.0 * t / d.tau_r);
    CHECK(x * x + y * y == doctest::Approx(expect).epsilon(1e-13));
  }
  // decaying envelope with positive mz
  CHECK(std::hypot(mean_moments(d, 3 * d.tau_r).first, mean_moments(d, 3 * d.tau_r).second) < 0.06 * d.rho);

  // gamma = 0, phi = 0: precession at g H0 with constant norm
  const auto p = derive_ohmic(hot_sys, BathSpec::ohmic(0.0, 1e6), 0.2, 0.5, 0.0);
  for (double t : {0.1, 1.0, 10.0}) {
    const auto [x, y] = mean_moments(p, t);
    CHECK(x == doctest::Approx(0.5 * std::cos(8.0 * t)).epsilon(1e-13));
    CHECK(std::abs(y + 0.5 * std::sin(8.0 * t)) < 1e-13);
    CHECK(std::hypot(x, y) == doctest::Approx(0.5).epsilon(1e-14));
  }
}

TEST_CASE("autocorrelation") {
  const auto d = hot();
  const double M = total_moment(hot_sys);
  CHECK(autocorrelation(d, M, 0.0) == doctest::Approx(M * M).epsilon(1e-15));
  CHECK(autocorrelation(d, M, 60.0 * d.tau_r) == doctest::Approx(d.mz * d.mz).epsilon(1e-15));
  const double half = std::numbers::pi / d.omega_tilde;
  CHECK(autocorrelation(d, M, half) == doctest::Approx(0.034265983958459837445).epsilon(1e-13));
  for (int k = 0; k <= 500; ++k) {
    const double t = 10.0 * d.tau_r * k / 500.0;
    CHECK(std::abs(autocorrelation(d, M, t) - d.mz * d.mz) <= (M * M - d.mz * d.mz) * std::exp(-t / d.tau_r) * (1 + 1e-15));
  }
}

TEST_CASE("classical limit") {
  CHECK(classical_relaxation_time({0.5, 1.0, 1.0}, 0.01, 0.19) == doctest::Approx(263.15789473684210526).epsilon(1e-15));
  CHECK_THROWS_AS(classical_relaxation_time({0.5, 1.0, 1.0}, 0.0, 0.19), DegenerateError);
  CHECK_THROWS_AS(classical_autocorrelation({0.5, 1.0, 0.0}, 0.1, 0.19, 0.8, 1.0), DegenerateError);

  const SpinSystem sys{0.5, 1.0, 1.0};
  const double M = total_moment(sys);
  const double mz = 0.19;
  for (double gamma : {1e-4, 1e-5}) {
    const auto d = derive_ohmic(sys, BathSpec::ohmic(gamma, 1e-12), mz, 0.0, 0.0);
    CHECK(d.tau_r == doctest::Approx(classical_relaxation_time(sys, gamma, mz)).epsilon(1e-6));
    CHECK(d.omega_tilde == doctest::Approx(sys.g * sys.H0).epsilon(1e-6));
    for (double t : {0.0, 0.5, 3.0, 20.0, 100.0})
      CHECK(std::abs(autocorrelation(d, M, t) - classical_autocorrelation(sys, gamma, mz, M, t)) <= 1e-6 * M * M);
  }
}

TEST_CASE("complex tanh") {
  for (double x : {-3.0, -0.2, 0.0, 0.4, 2.0})
    for (double y : {-1.0, 0.0, 0.3, 1.2}) {
      const cplx ref = std::tanh(cplx(x, y));
      const cplx got = tanh_complex(cplx(x, y));
      CHECK(std::abs(got - ref) <= 1e-14 * (1 + std::abs(ref)));
    }
  const cplx big = tanh_complex(cplx(1e6, 0.7));
  CHECK(big.real() == 1.0);
  CHECK(big.imag() == 0.0);
  CHECK(tanh_complex(cplx(-800.0, 2.0)).real() == -1.0);
}

TEST_CASE("response family") {
  for (const auto& [sys, bath, env] : {std::tuple{hot_sys, hot_bath, hot_env},
                                       std::tuple{SpinSystem{0.5, 1.0, 0.1}, BathSpec::ohmic(0.05, 1e6), ThermalEnv{0.01, 1.0, 1.0}}}) {
    const double mz = equilibrium_mz(sys, env).mz;
    const double mxy = transverse_moment(sys, mz);
    const auto d = derive_ohmic(sys, bath, mz, std::sqrt(0.6) * mxy, std::sqrt(0.4) * mxy);
    const double x = 4.0 * d.B / env.omega_th();
    const double y = 4.0 * d.A / env.omega_th();

    const auto r0 = response_family(d, env, 0.0);
    CHECK(std::isfinite(r0.r_total));
    if (x < 700.0) {
      const double expect = -2.0 * mxy * mxy * std::sin(y) / (std::cos(y) + std::cosh(x));
      CHECK(r0.r_total == doctest::Approx(expect).epsilon(1e-12));
    }
    const double K = 2.0 * mxy * mxy;
    for (int k = 0; k <= 300; ++k) {
      const double t = 5.0 * d.tau_r * k / 300.0;
      const auto r = response_family(d, env, t);
      CHECK(std::isfinite(r.r_prime));
      CHECK(std::isfinite(r.r_double_prime_imag));
      // R'(t) + i R''(t) is real and equals -R(t): the closed forms disagree by a sign.
      CHECK(r.r_prime - r.r_double_prime_imag == doctest::Approx(-r.r_total).epsilon(1e-10).scale(K));
    }
  }
}

TEST_CASE("response bound with the exact constant") {
  const SpinSystem sys{0.5, 1.0, 0.01};
  const ThermalEnv env{5.0, 1.0, 1.0};
  const auto d = derive_ohmic(sys, BathSpec::ohmic(0.02, 1.0), 0.2, 0.1, 0.1);
  const double x = 4 * d.B / env.omega_th(), y = 4 * d.A / env.omega_th();
  const double K = 2 * d.mxy * d.mxy * (1 + std::sinh(x)) / (std::cos(y) + std::cosh(x));
  for (int k = 0; k < 200; ++k) {
    const double t = 0.37 * k;
    CHECK(std::abs(response_family(d, env, t).r_total) <= K * std::exp(-d.A * t) * (1 + 1e-12));
  }
}

TEST_CASE("frequency-domain R'") {
  const auto d = hot();
  for (double w : {0.0, 1e3, 2e5, 4.1e5, 9e5}) {
    const cplx a = response_real_omega(d, hot_env, w);
    const cplx b = response_real_omega(d, hot_env, -w);
    CHECK(std::abs(a - std::conj(b)) <= 1e-10 * std::abs(a));
    CHECK(std::abs(a - b) <= 1e-10 * std::abs(a));
    CHECK(std::abs(a.imag()) <= 1e-10 * std::abs(a));
  }
  const double r1 = std::abs(response_real_omega(d, hot_env, 1e9));
  const double r2 = std::abs(response_real_omega(d, hot_env, 2e9));
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(1e-4));

  const auto undamped = derive_ohmic(hot_sys, BathSpec::ohmic(0.0, 1e6), 0.1, 0.0, 0.0);
  CHECK_THROWS_AS(response_real_omega(undamped, hot_env, 8.0), DegenerateError);
}

TEST_CASE("closed-form spectra") {
  const auto d = hot();
  // Lorentzian pair integrates to 2 pi mxy^2 (= 2 pi [C(0) - mz^2])
  double sum = 0.0;
  const double h = d.A / 50.0;
  for (int k = -2000000; k <= 2000000; ++k) sum += correlation_spectrum_closed(d, k * h) * h;
  CHECK(sum == doctest::Approx(2 * std::numbers::pi * d.mxy * d.mxy).epsilon(2e-4));
  CHECK(response_imag_omega(d, hot_env, 0.0) == 0.0);
  CHECK(response_imag_omega(d, hot_env, -3e5) == doctest::Approx(-response_imag_omega(d, hot_env, 3e5)));
}

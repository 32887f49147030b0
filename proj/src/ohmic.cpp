#include <spinlangevin/ohmic.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace spinlangevin {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void check_real(cplx z, double scale, const char* what) {
  if (std::abs(z.imag()) > 1e-10 * scale + 1e-300)
    throw NumericalError(std::string(what) + ": imaginary residue above tolerance");
}

}  // namespace

OhmicDerived derive_ohmic(const SpinSystem& sys, const BathSpec& bath, double mz, double mx0, double my0) {
  validate(sys);
  validate(bath);
  if (bath.kind != BathKind::Ohmic) throw DomainError("derive_ohmic needs an Ohmic bath");
  const double M = total_moment(sys);
  OhmicDerived d;
  d.mz = mz;
  d.mxy = transverse_moment(sys, mz);
  d.rho = std::hypot(mx0, my0);
  if (d.rho * d.rho > d.mxy * d.mxy + 1e-12 * M * M)
    throw DomainError("initial transverse moment exceeds sqrt(M^2 - mz^2)");
  d.phi = d.rho > 0.0 ? std::atan2(my0, mx0) : 0.0;

  const double g = sys.g;
  const double k = 2.0 * bath.gamma * g * mz;
  const double w = g * (sys.H0 + 2.0 * mz * bath.Omega * bath.gamma);
  const double den = 1.0 + k * k;
  d.omega_tilde = w / den;
  d.B = d.omega_tilde;
  d.A = k * w / den;
  d.tau_r = d.A == 0.0 ? inf : 1.0 / d.A;
  return d;
}

std::pair<double, double> mean_moments(const OhmicDerived& d, double t) {
  const double env = d.rho * std::exp(-d.A * t);
  const double arg = d.omega_tilde * t - d.phi;
  return {env * std::cos(arg), -env * std::sin(arg)};
}

double autocorrelation(const OhmicDerived& d, double M, double t) {
  return d.mz * d.mz + (M * M - d.mz * d.mz) * std::exp(-d.A * t) * std::cos(d.omega_tilde * t);
}

double classical_relaxation_time(const SpinSystem& sys, double gamma, double mz) {
  const double rate = 2.0 * mz * gamma * sys.g * sys.g * sys.H0;
  if (rate == 0.0) throw DegenerateError("classical relaxation time is infinite (mz gamma H0 = 0)");
  return 1.0 / rate;
}

double classical_autocorrelation(const SpinSystem& sys, double gamma, double mz, double M, double t) {
  const double tau = classical_relaxation_time(sys, gamma, mz);
  return mz * mz + (M * M - mz * mz) * std::exp(-t / tau) * std::cos(sys.g * sys.H0 * t);
}

cplx tanh_complex(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  const double e = std::exp(-2.0 * std::abs(x));
  const double em = std::expm1(-2.0 * std::abs(x));
  const double c = std::cos(y);
  const double den = em * em + 4.0 * e * c * c;
  const double re = std::copysign(1.0, x) * (1.0 - e * e) / den;
  const double im = 2.0 * e * std::sin(2.0 * y) / den;
  return {x == 0.0 ? 0.0 : re, im};
}

ResponseValues response_family(const OhmicDerived& d, const ThermalEnv& env, double t) {
  validate(env);
  const double wth = env.omega_th();
  const double amp = d.mxy * d.mxy * std::exp(-d.A * t) / env.hbar;
  const cplx i(0.0, 1.0);
  const cplx t_minus = tanh_complex(2.0 * cplx(d.B, -d.A) / wth);
  const cplx t_plus = tanh_complex(2.0 * cplx(d.B, d.A) / wth);
  const cplx ph = std::exp(-i * (d.B * t));

  const cplx r2 = amp * (ph * t_minus - std::conj(ph) * t_plus) / 2.0;
  const cplx r1 = -i * amp * (-ph * t_minus + std::conj(ph) * t_plus) / 2.0;
  const double scale = amp * (std::abs(t_minus) + std::abs(t_plus));
  check_real(r1, scale, "R'(t)");
  check_real(cplx(r2.imag(), r2.real()), scale, "R''(t)");

  // sinh(x)/(cos y + cosh x) and sin(y)/(cos y + cosh x), scaled by exp(-|x|)
  const double x = 4.0 * d.B / wth;
  const double y = 4.0 * d.A / wth;
  const double e = std::exp(-std::abs(x));
  const double em = std::expm1(-std::abs(x));
  const double cy = std::cos(0.5 * y);
  const double den = em * em + 4.0 * e * cy * cy;
  const double sh = std::copysign(1.0, x) * (1.0 - e * e) / den;
  const double sn = 2.0 * e * std::sin(y) / den;
  const double total = -2.0 * amp * (std::cos(d.B * t) * sn + std::sin(d.B * t) * sh);

  return {r1.real(), r2.imag(), total};
}

cplx response_real_omega(const OhmicDerived& d, const ThermalEnv& env, double omega) {
  validate(env);
  if (d.A == 0.0 && std::abs(std::abs(omega) - d.B) == 0.0)
    throw DegenerateError("R'(omega) has a pole on the real axis at omega = +-B");
  const double wth = env.omega_th();
  const cplx zm(d.B, -d.A);
  const cplx zp(d.B, d.A);
  const cplx t_minus = tanh_complex(2.0 * zm / wth);
  const cplx t_plus = tanh_complex(2.0 * zp / wth);
  const cplx term1 = t_minus * zm / (env.hbar * (zm * zm - omega * omega));
  const cplx term2 = t_plus * zp / (env.hbar * (d.B - omega + cplx(0.0, d.A)) * (d.B + omega + cplx(0.0, d.A)));
  return d.mxy * d.mxy / std::sqrt(2.0 * std::numbers::pi) * (term1 + term2);
}

double correlation_spectrum_closed(const OhmicDerived& d, double omega) {
  const double a2 = d.A * d.A;
  const double lm = d.A / (a2 + (omega - d.B) * (omega - d.B));
  const double lp = d.A / (a2 + (omega + d.B) * (omega + d.B));
  return d.mxy * d.mxy * (lm + lp);
}

double response_imag_omega(const OhmicDerived& d, const ThermalEnv& env, double omega) {
  return std::tanh(omega / env.omega_th()) * correlation_spectrum_closed(d, omega) / env.hbar;
}

}  // namespace spinlangevin

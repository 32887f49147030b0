#pragma once

#include <spinlangevin/types.hpp>

#include <utility>

namespace spinlangevin {

struct OhmicDerived {
  double mz = 0.0;
  double mxy = 0.0;  // sqrt(M^2 - mz^2), amplitude of C(t) and R(t)
  double rho = 0.0;  // |(mx0, my0)|, amplitude of the mean moments
  double phi = 0.0;  // atan2(my0, mx0)
  double omega_tilde = 0.0;
  double tau_r = 0.0;  // +inf when the damping rate vanishes
  double A = 0.0;      // 1 / tau_r
  double B = 0.0;      // omega_tilde
};

// The damping rate A vanishes for gamma = 0, mz = 0 or H0 + 2 mz Omega gamma = 0;
// tau_r is then reported as +inf rather than raising.
OhmicDerived derive_ohmic(const SpinSystem& sys, const BathSpec& bath, double mz, double mx0,
                          double my0);

// (mx, my) at time t. Reproduces (mx0, my0) at t = 0.
std::pair<double, double> mean_moments(const OhmicDerived& d, double t);

// mz^2 + (M^2 - mz^2) exp(-t/tau_r) cos(omega_tilde t)
double autocorrelation(const OhmicDerived& d, double M, double t);

// Small-gamma, Omega -> 0 form with tau_cl = 1/(2 mz gamma g^2 H0) and frequency g H0.
double classical_relaxation_time(const SpinSystem& sys, double gamma, double mz);
double classical_autocorrelation(const SpinSystem& sys, double gamma, double mz, double M, double t);

struct ResponseValues {
  double r_prime;               // R'(t), real
  double r_double_prime_imag;   // R''(t) is purely imaginary; this is its imaginary part
  double r_total;               // closed-form total R(t)
};

ResponseValues response_family(const OhmicDerived& d, const ThermalEnv& env, double t);

// Closed-form R'(omega) as a complex value (its imaginary part vanishes up to rounding).
cplx response_real_omega(const OhmicDerived& d, const ThermalEnv& env, double omega);

// Full-line transform of the mz^2-subtracted C(t): two Lorentzians at +-B of half-width A.
double correlation_spectrum_closed(const OhmicDerived& d, double omega);

// tanh(omega / Omega_th) C(omega) / hbar
double response_imag_omega(const OhmicDerived& d, const ThermalEnv& env, double omega);

// tanh(x + iy) without overflow for large |x|.
cplx tanh_complex(cplx z);

}  // namespace spinlangevin

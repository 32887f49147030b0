#pragma once

#include <spinlangevin/types.hpp>

#include <utility>

namespace spinlangevin {

// Mean equations with Z = mx + i my:  Z'' + (a + ib) Z' + i c Z = 0.
// The conjugate branch carries u2 = a - ib, r2 = conj(r1).
struct DrudeCoefficients {
  double a = 0.0;  // 1/tau
  double b = 0.0;  // g (H0 + 3 gamma mz / tau)
  double c = 0.0;  // (g/tau) (H0 + 2 gamma mz / tau)
  double kappa = 0.0;  // c/a, initial precession rate: Z'(0) = -i kappa Z(0)
  cplx r1, r2;         // sqrt((a+ib)^2 - 4ic), sqrt((a-ib)^2 + 4ic)
  // Hyperbolic phases: the branch solution is exp(-u t/2) cosh(r t/2 + phi) / cosh(phi).
  // Infinite or NaN when r vanishes (double root).
  cplx phi1, phi2;
};

DrudeCoefficients derive_drude(const SpinSystem& sys, const BathSpec& bath, double mz);

// Z(t) for arbitrary Z(0) and Z'(0) on the branch (u, r).
cplx drude_branch(cplx u, cplx r, cplx z0, cplx dz0, double t);

// Transverse moment with explicit initial derivatives.
std::pair<double, double> drude_mean_moments(const DrudeCoefficients& dc, double mx0, double my0, double dmx0,
                                             double dmy0, double t);

// Initial derivatives from the precession relation Z'(0) = -i kappa Z(0).
std::pair<double, double> drude_mean_moments(const DrudeCoefficients& dc, double mx0, double my0, double t);

double drude_autocorrelation(const DrudeCoefficients& dc, double mz, double mx0, double my0, double t);

// Slowest decay rate among the characteristic exponents of both branches.
double drude_decay_rate(const DrudeCoefficients& dc);

}  // namespace spinlangevin

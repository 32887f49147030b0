#include <spinlangevin/drude.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace spinlangevin {

namespace {

constexpr cplx I(0.0, 1.0);

void check_residue(double residue, double scale, const char* what) {
  if (!(std::abs(residue) <= 1e-9 * scale + 1e-300))
    throw NumericalError(std::string(what) + ": conjugate branches fail to cancel");
}

cplx phase(cplx u, cplx s, cplx r) {
  if (std::abs(r) < 1e-8 * (std::abs(u) + 1.0))
    return {std::numeric_limits<double>::infinity(), 0.0};
  return std::atanh((u + 2.0 * s) / r);
}

}  // namespace

DrudeCoefficients derive_drude(const SpinSystem& sys, const BathSpec& bath, double mz) {
  validate(sys);
  validate(bath);
  if (bath.kind != BathKind::Drude) throw DomainError("derive_drude needs a Drude bath");
  DrudeCoefficients dc;
  const double g = sys.g;
  const double tau = bath.tau;
  dc.a = 1.0 / tau;
  dc.b = g * (sys.H0 + 3.0 * bath.gamma * mz / tau);
  dc.c = (g / tau) * (sys.H0 + 2.0 * bath.gamma * mz / tau);
  dc.kappa = g * (sys.H0 + 2.0 * bath.gamma * mz / tau);
  const cplx u1(dc.a, dc.b);
  dc.r1 = std::sqrt(u1 * u1 - 4.0 * I * dc.c);
  // sqrt((a-ib)^2 + 4ic) is conj(r1) up to sign; the branch solution is even in r,
  // so pin the conjugate to keep the two branches exactly mirrored.
  dc.r2 = std::conj(dc.r1);
  dc.phi1 = phase(u1, -I * dc.kappa, dc.r1);
  dc.phi2 = phase(std::conj(u1), I * dc.kappa, dc.r2);
  return dc;
}

cplx drude_branch(cplx u, cplx r, cplx z0, cplx dz0, double t) {
  const cplx lp = 0.5 * (-u + r);
  const cplx lm = 0.5 * (-u - r);
  const cplx ep = std::exp(lp * t);
  const cplx em = std::exp(lm * t);
  const cplx ch = 0.5 * (ep + em);  // exp(-u t/2) cosh(r t/2)
  const cplx z = 0.5 * r * t;
  cplx sh;                            // exp(-u t/2) sinh(r t/2) / r
  if (std::abs(z) > 1e-3) {
    sh = (ep - em) / (2.0 * r);
  } else {
    const cplx z2 = z * z;
    sh = std::exp(-0.5 * u * t) * (0.5 * t) * (1.0 + z2 / 6.0 + z2 * z2 / 120.0);
  }
  return z0 * ch + (u * z0 + 2.0 * dz0) * sh;
}

std::pair<double, double> drude_mean_moments(const DrudeCoefficients& dc, double mx0, double my0, double dmx0,
                                             double dmy0, double t) {
  const cplx u1(dc.a, dc.b);
  const cplx z0(mx0, my0);
  const cplx dz0(dmx0, dmy0);
  const cplx h1 = drude_branch(u1, dc.r1, z0, dz0, t);
  const cplx h2 = drude_branch(std::conj(u1), dc.r2, std::conj(z0), std::conj(dz0), t);
  const cplx mx = 0.5 * (h1 + h2);
  const cplx my = (h1 - h2) / (2.0 * I);
  const double scale = std::abs(h1) + std::abs(h2);
  check_residue(mx.imag(), scale, "drude mx");
  check_residue(my.imag(), scale, "drude my");
  return {mx.real(), my.real()};
}

std::pair<double, double> drude_mean_moments(const DrudeCoefficients& dc, double mx0, double my0, double t) {
  // Z'(0) = -i kappa Z(0)  <=>  dmx0 = kappa my0, dmy0 = -kappa mx0
  return drude_mean_moments(dc, mx0, my0, dc.kappa * my0, -dc.kappa * mx0, t);
}

double drude_autocorrelation(const DrudeCoefficients& dc, double mz, double mx0, double my0, double t) {
  const cplx u1(dc.a, dc.b);
  const cplx k1 = drude_branch(u1, dc.r1, 1.0, -I * dc.kappa, t);
  const cplx k2 = drude_branch(std::conj(u1), dc.r2, 1.0, I * dc.kappa, t);
  const cplx bracket = 0.5 * (k1 + k2);
  check_residue(bracket.imag(), std::abs(k1) + std::abs(k2), "drude C(t)");
  return mz * mz + (mx0 * mx0 + my0 * my0) * bracket.real();
}

double drude_decay_rate(const DrudeCoefficients& dc) {
  const cplx u1(dc.a, dc.b);
  const double rp = -0.5 * (-u1 + dc.r1).real();
  const double rm = -0.5 * (-u1 - dc.r1).real();
  return std::min(rp, rm);
}

}  // namespace spinlangevin

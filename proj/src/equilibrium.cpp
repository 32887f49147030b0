#include <spinlangevin/equilibrium.hpp>

#include <cmath>

namespace spinlangevin {

double langevin(double y) {
  const double ay = std::abs(y);
  if (ay < 0.1) {
    const double y2 = y * y;
    // y/3 - y^3/45 + 2y^5/945 - y^7/4725 + 2y^9/93555
    return y * (1.0 / 3.0 + y2 * (-1.0 / 45.0 + y2 * (2.0 / 945.0 + y2 * (-1.0 / 4725.0 + y2 * (2.0 / 93555.0)))));
  }
  return 1.0 / std::tanh(y) - 1.0 / y;
}

double brillouin(double S, double x) {
  if (std::abs(x) < 1e-6) return (S + 1.0) * x / (3.0 * S);
  const double p = (2.0 * S + 1.0) / (2.0 * S);
  const double q = 1.0 / (2.0 * S);
  if (std::abs(q * x) >= 0.1) return p / std::tanh(p * x) - q / std::tanh(q * x);
  // The 1/x poles of the two coth terms cancel exactly, so subtract them analytically.
  return p * langevin(p * x) - q * langevin(q * x);
}

EquilibriumResult equilibrium_mz(const SpinSystem& sys, const ThermalEnv& env, MzSign sign) {
  validate(sys);
  validate(env);
  EquilibriumResult r{};
  r.x = sys.S * sys.H0 / (env.kB * env.T);
  r.bs = brillouin(sys.S, r.x);
  const double mag = sys.g * sys.S * r.bs;
  r.mz = sign == MzSign::AlignedPositive ? mag : -mag;
  return r;
}

}  // namespace spinlangevin

#pragma once

#include <spinlangevin/types.hpp>

namespace spinlangevin {

// coth(y) - 1/y, accurate through y = 0.
double langevin(double y);

// B_S(x) = p coth(p x) - q coth(q x), p = (2S+1)/(2S), q = 1/(2S).
double brillouin(double S, double x);

// AntiAligned gives mz = -g S B_S(x); the relaxation formulas need mz > 0, so AlignedPositive is the default.
enum class MzSign { AntiAligned, AlignedPositive };

struct EquilibriumResult {
  double x;   // S H0 / (kB T)
  double bs;  // B_S(x)
  double mz;
};

EquilibriumResult equilibrium_mz(const SpinSystem& sys, const ThermalEnv& env,
                                 MzSign sign = MzSign::AlignedPositive);

}  // namespace spinlangevin

#pragma once

#include <spinlangevin/types.hpp>

#include <cstdint>
#include <vector>

namespace spinlangevin {

// Re K(w) for K(t) = m mu(t).
// Ohmic: 2 m gamma for |w| <= Omega, else 0.  Drude: m gamma / (1 + w^2 tau^2).
double kernel_spectrum(const BathSpec& bath, double omega, double mass = 1.0);

struct NoiseSpectrum {
  BathSpec bath;
  ThermalEnv env;
  double mass = 1.0;
  bool quantum = true;  // hbar w coth(hbar w / 2 kB T) weighting; false gives 2 kB T

  // Two-sided power spectral density per Cartesian component.
  double psd(double omega) const;
};

struct NoisePath {
  TimeGrid grid;
  std::vector<double> fx, fy, fz;
};

// Stationary Gaussian paths with autocorrelation (1/2pi) int psd(w) exp(-i w s) dw.
// A path of length 2n is shaped in the frequency domain and its first n samples kept.
// grid.n must be a power of two. Throws NyquistError if pi/dt is below the spectral
// support (Ohmic: Omega; Drude: 10/tau).
NoisePath synthesize_noise(const NoiseSpectrum& spec, const TimeGrid& grid, std::uint64_t seed);

}  // namespace spinlangevin

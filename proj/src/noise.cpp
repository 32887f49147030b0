#include <spinlangevin/noise.hpp>

#include "fft.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace spinlangevin {

double kernel_spectrum(const BathSpec& bath, double omega, double mass) {
  if (bath.kind == BathKind::Ohmic) return std::abs(omega) <= bath.Omega ? 2.0 * mass * bath.gamma : 0.0;
  const double wt = omega * bath.tau;
  return mass * bath.gamma / (1.0 + wt * wt);
}

double NoiseSpectrum::psd(double omega) const {
  const double k = kernel_spectrum(bath, omega, mass);
  const double thermal = 2.0 * env.kB * env.T;
  if (!quantum || omega == 0.0) return k * thermal;
  const double e = env.hbar * std::abs(omega);
  return k * e / std::tanh(e / thermal);
}

NoisePath synthesize_noise(const NoiseSpectrum& spec, const TimeGrid& grid, std::uint64_t seed) {
  validate(spec.bath);
  validate(spec.env);
  const std::size_t n = grid.n;
  if ((n & (n - 1)) != 0) throw DomainError("noise length must be a power of two");
  const double nyquist = std::numbers::pi / grid.dt;
  const double support = spec.bath.kind == BathKind::Ohmic ? spec.bath.Omega : 10.0 / spec.bath.tau;
  if (nyquist < support) throw NyquistError("time step too large for the noise spectrum support");

  const std::size_t L = 2 * n;
  const double dw = 2.0 * std::numbers::pi / (static_cast<double>(L) * grid.dt);
  std::vector<double> sigma(L / 2 + 1);
  for (std::size_t k = 0; k <= L / 2; ++k)
    sigma[k] = std::sqrt(spec.psd(static_cast<double>(k) * dw) / (static_cast<double>(L) * grid.dt));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  NoisePath path{grid, {}, {}, {}};
  for (auto* out : {&path.fx, &path.fy, &path.fz}) {
    std::vector<cplx> c(L / 2 + 1);
    c[0] = sigma[0] * normal(rng);
    for (std::size_t k = 1; k < L / 2; ++k) {
      const double re = normal(rng);
      const double im = normal(rng);
      c[k] = sigma[k] * std::numbers::sqrt2 / 2.0 * cplx(re, im);
    }
    c[L / 2] = sigma[L / 2] * normal(rng);
    auto full = detail::hermitian_to_real(c, L);
    full.resize(n);
    *out = std::move(full);
  }
  return path;
}

}  // namespace spinlangevin

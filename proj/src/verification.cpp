#include <spinlangevin/spectral.hpp>
#include <spinlangevin/verification.hpp>

#include <algorithm>
#include <cmath>

namespace spinlangevin {

FdtRoundtrip fdt_roundtrip(const OhmicDerived& d, const ThermalEnv& env, double M, std::size_t n_half,
                           double window_tau_r) {
  if (!std::isfinite(d.tau_r) || d.tau_r <= 0.0) throw DegenerateError("FDT roundtrip needs a finite tau_R");
  const double dt = window_tau_r * d.tau_r / static_cast<double>(n_half - 1);
  Series c(TimeGrid(0.0, dt, n_half));
  for (std::size_t k = 0; k < n_half; ++k) c.values[k] = autocorrelation(d, M, c.grid[k]) - d.mz * d.mz;

  const auto r2 = inverse_spectrum(fdt_imag_response(correlation_spectrum(c), env));

  FdtRoundtrip out;
  double num = 0.0, den = 0.0;
  const double t_end = 3.0 * d.tau_r;
  for (std::size_t k = 0; k < r2.grid.n && r2.grid[k] <= t_end; ++k) {
    const double t = r2.grid[k];
    const double fft = r2.values[k].imag();
    const double closed = response_family(d, env, t).r_double_prime_imag;
    out.t.push_back(t);
    out.r2_fft.push_back(fft);
    out.r2_closed.push_back(closed);
    num += (fft - closed) * (fft - closed);
    den += closed * closed;
  }
  out.rel_l2 = den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
  return out;
}

KkRoundtrip kk_roundtrip(const OhmicDerived& d, const ThermalEnv& env, double span_b, std::size_t points,
                         std::size_t n_eval) {
  if (points < 8 || n_eval < 2) throw DomainError("Kramers-Kronig check needs more points");
  const double half = 0.5 * span_b * d.B;
  const double h = 2.0 * half / static_cast<double>(points - 1);
  RealSpectrum r2(FrequencyGrid(-half, h, points));
  for (std::size_t j = 0; j < points; ++j) r2.values[j] = response_imag_omega(d, env, r2.grid[j]);

  KkRoundtrip out;
  double worst = 0.0, peak = 0.0;
  for (std::size_t i = 0; i < n_eval; ++i) {
    const double w = -2.0 * d.B + 4.0 * d.B * static_cast<double>(i) / static_cast<double>(n_eval - 1);
    const double pv = kramers_kronig_real(r2, w);
    const double closed = response_real_omega(d, env, w).real();
    out.omega.push_back(w);
    out.r1_pv.push_back(pv);
    out.r1_closed.push_back(closed);
    worst = std::max(worst, std::abs(pv - closed));
    peak = std::max(peak, std::abs(closed));
  }
  out.rel_err = peak > 0.0 ? worst / peak : worst;
  return out;
}

}  // namespace spinlangevin

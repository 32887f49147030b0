#pragma once

#include <spinlangevin/types.hpp>

namespace spinlangevin {

// Samples c(k dt), k = 0..n-1 (grid must start at t = 0), mirrored to C(|t|) on a
// periodic array of length L = 2(n-1) and transformed as dt * sum C(t) exp(-i w t).
// The result sits on a centered grid w_k = (k - L/2) dw, dw = 2 pi / (L dt).
// Throws WindowError unless max |c| over the last 5% of samples is <= 1e-6 |c(0)|.
Spectrum correlation_spectrum(const Series& c);

// Inverse of correlation_spectrum: (1/(L dt)) sum X(w) exp(+i w t), returned for
// t = 0 .. (L/2) dt, i.e. the same n samples the forward transform consumed.
ComplexSeries inverse_spectrum(const Spectrum& s);

// R''(w) = tanh(w / Omega_th) C(w) / hbar
Spectrum fdt_imag_response(const Spectrum& cw, const ThermalEnv& env);

// R'(w) = (1/pi) PV int w' R''(w') / (w'^2 - w^2) dw' over the sampled range, evaluated as
// (1/2pi) [P(w) + P(-w)] with P(x) = PV int R''(w') / (w' - x) dw'. The pole is removed by
// subtracting R''(x) and adding its analytic log term; the remainder uses the trapezoid rule.
// Throws EdgeError if +-w lies within 5 grid spacings of either end, or if |R''| at the
// ends exceeds 1e-4 of its peak.
double kramers_kronig_real(const RealSpectrum& r_imag, double omega);

}  // namespace spinlangevin

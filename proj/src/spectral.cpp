#include <spinlangevin/spectral.hpp>

#include "fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace spinlangevin {

Spectrum correlation_spectrum(const Series& c) {
  const std::size_t n = c.grid.n;
  if (c.grid.t0 != 0.0) throw DomainError("correlation samples must start at t = 0");
  const double c0 = std::abs(c.values[0]);
  const std::size_t tail = std::max<std::size_t>(1, n / 20);
  double tail_max = 0.0;
  for (std::size_t k = n - tail; k < n; ++k) tail_max = std::max(tail_max, std::abs(c.values[k]));
  if (tail_max > 1e-6 * c0) throw WindowError("correlation has not decayed to 1e-6 C(0) by the window end");

  const std::size_t L = 2 * (n - 1);
  const double dt = c.grid.dt;
  std::vector<cplx> x(L);
  for (std::size_t k = 0; k < n; ++k) x[k] = c.values[k];
  for (std::size_t k = 1; k + 1 < n; ++k) x[L - k] = c.values[k];
  const auto X = detail::dft(x, -1);

  const double dw = 2.0 * std::numbers::pi / (static_cast<double>(L) * dt);
  Spectrum s(FrequencyGrid(-static_cast<double>(L / 2) * dw, dw, L));
  for (std::size_t k = 0; k < L; ++k) s.values[(k + L / 2) % L] = dt * X[k];
  return s;
}

ComplexSeries inverse_spectrum(const Spectrum& s) {
  const std::size_t L = s.grid.n;
  if (L % 2 != 0) throw DomainError("inverse_spectrum needs an even-length centered grid");
  const double dt = 2.0 * std::numbers::pi / (static_cast<double>(L) * s.grid.domega);
  std::vector<cplx> X(L);
  for (std::size_t k = 0; k < L; ++k) X[k] = s.values[(k + L / 2) % L];
  const auto x = detail::dft(X, +1);
  const std::size_t n = L / 2 + 1;
  ComplexSeries out(TimeGrid(0.0, dt, n));
  const double scale = 1.0 / (static_cast<double>(L) * dt);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = scale * x[k];
  return out;
}

Spectrum fdt_imag_response(const Spectrum& cw, const ThermalEnv& env) {
  validate(env);
  Spectrum out(cw.grid);
  const double wth = env.omega_th();
  for (std::size_t k = 0; k < cw.grid.n; ++k)
    out.values[k] = std::tanh(cw.grid[k] / wth) * cw.values[k] / env.hbar;
  return out;
}

namespace {

struct Local {
  double value;
  double slope;
};

// Cubic Lagrange interpolant through the four nodes around x.
Local cubic(const RealSpectrum& f, double x) {
  const auto& grid = f.grid;
  const double h = grid.domega;
  const auto n = static_cast<std::ptrdiff_t>(grid.n);
  auto j0 = static_cast<std::ptrdiff_t>(std::floor((x - grid.omega0) / h)) - 1;
  j0 = std::clamp<std::ptrdiff_t>(j0, 0, n - 4);
  const double s = (x - grid[static_cast<std::size_t>(j0)]) / h;  // in local units, nodes at 0..3
  const double y0 = f.values[j0], y1 = f.values[j0 + 1], y2 = f.values[j0 + 2], y3 = f.values[j0 + 3];
  const double l0 = -(s - 1) * (s - 2) * (s - 3) / 6.0;
  const double l1 = s * (s - 2) * (s - 3) / 2.0;
  const double l2 = -s * (s - 1) * (s - 3) / 2.0;
  const double l3 = s * (s - 1) * (s - 2) / 6.0;
  const double d0 = -((s - 2) * (s - 3) + (s - 1) * (s - 3) + (s - 1) * (s - 2)) / 6.0;
  const double d1 = ((s - 2) * (s - 3) + s * (s - 3) + s * (s - 2)) / 2.0;
  const double d2 = -((s - 1) * (s - 3) + s * (s - 3) + s * (s - 1)) / 2.0;
  const double d3 = ((s - 1) * (s - 2) + s * (s - 2) + s * (s - 1)) / 6.0;
  return {l0 * y0 + l1 * y1 + l2 * y2 + l3 * y3, (d0 * y0 + d1 * y1 + d2 * y2 + d3 * y3) / h};
}

double principal_value(const RealSpectrum& f, double x0) {
  const auto& grid = f.grid;
  const std::size_t n = grid.n;
  const double h = grid.domega;
  const double a = grid[0];
  const double b = grid[n - 1];
  const double fx0 = cubic(f, x0).value;
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double dx = grid[j] - x0;
    double gj;
    if (std::abs(dx) < 1e-3 * h) {
      gj = cubic(f, 0.5 * (grid[j] + x0)).slope;
    } else {
      gj = (f.values[j] - fx0) / dx;
    }
    sum += (j == 0 || j == n - 1) ? 0.5 * gj : gj;
  }
  return h * sum + fx0 * std::log((b - x0) / (x0 - a));
}

}  // namespace

double kramers_kronig_real(const RealSpectrum& r_imag, double omega) {
  const auto& grid = r_imag.grid;
  if (grid.n < 8) throw EdgeError("grid too short for the principal-value quadrature");
  const double lo = grid[0] + 5.0 * grid.domega;
  const double hi = grid[grid.n - 1] - 5.0 * grid.domega;
  if (omega < lo || omega > hi || -omega < lo || -omega > hi)
    throw EdgeError("evaluation frequency within 5 grid spacings of the boundary");
  double peak = 0.0;
  for (double v : r_imag.values) peak = std::max(peak, std::abs(v));
  const double edge = std::max(std::abs(r_imag.values.front()), std::abs(r_imag.values.back()));
  if (edge > 1e-4 * peak) throw EdgeError("R'' has not decayed to 1e-4 of its peak at the grid edges");
  if (peak == 0.0) return 0.0;
  return (principal_value(r_imag, omega) + principal_value(r_imag, -omega)) / (2.0 * std::numbers::pi);
}

}  // namespace spinlangevin

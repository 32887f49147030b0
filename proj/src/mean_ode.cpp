#include <spinlangevin/mean_ode.hpp>

#include <algorithm>
#include <array>
#include <cmath>

namespace spinlangevin {

namespace {

template <std::size_t N, class F>
std::array<double, N> rk4_step(const F& f, const std::array<double, N>& y, double h) {
  auto axpy = [](const std::array<double, N>& a, double s, const std::array<double, N>& b) {
    std::array<double, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + s * b[i];
    return r;
  };
  const auto k1 = f(y);
  const auto k2 = f(axpy(y, 0.5 * h, k1));
  const auto k3 = f(axpy(y, 0.5 * h, k2));
  const auto k4 = f(axpy(y, h, k3));
  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

}  // namespace

Trajectory integrate_ohmic_mean(const MeanOdeProblem& p, const TimeGrid& grid) {
  if (p.kind != MeanOdeKind::OhmicFirstOrder) throw DomainError("problem is not Ohmic first order");
  validate(p.sys);
  validate(p.bath);
  const double g = p.sys.g;
  // mx' - k my' = W my,  my' + k mx' = -W mx
  const double k = 2.0 * p.bath.gamma * g * p.mz;
  const double W = g * (p.sys.H0 + 2.0 * p.bath.Omega * p.bath.gamma * p.mz);
  const double det = 1.0 + k * k;
  if (det < 1e-12) throw StiffnessError("derivative coupling matrix is singular");
  // Inverted once: [mx', my'] = J [mx, my]
  const double j11 = -k * W / det, j12 = W / det;
  const double j21 = -W / det, j22 = -k * W / det;
  auto f = [&](const std::array<double, 2>& v) {
    return std::array<double, 2>{j11 * v[0] + j12 * v[1], j21 * v[0] + j22 * v[1]};
  };

  Trajectory tr{grid, std::vector<SpinState>(grid.n)};
  std::array<double, 2> y{p.mx0, p.my0};
  tr.states[0] = {y[0], y[1], p.mz};
  for (std::size_t i = 1; i < grid.n; ++i) {
    y = rk4_step<2>(f, y, grid.dt);
    tr.states[i] = {y[0], y[1], p.mz};
  }
  return tr;
}

Trajectory integrate_drude_mean(const MeanOdeProblem& p, const TimeGrid& grid) {
  if (p.kind != MeanOdeKind::DrudeSecondOrder) throw DomainError("problem is not Drude second order");
  validate(p.sys);
  validate(p.bath);
  const double g = p.sys.g;
  const double tau = p.bath.tau;
  const double a = 1.0 / tau;
  const double b = g * (p.sys.H0 + 3.0 * p.bath.gamma * p.mz / tau);
  const double c = (g / tau) * (p.sys.H0 + 2.0 * p.bath.gamma * p.mz / tau);
  const double fastest = std::max({std::abs(b), a, std::sqrt(std::abs(c))});
  if (grid.dt * fastest >= 0.1)
    throw StepError("time step too coarse for the Drude mean equations (dt * rate >= 0.1)");

  const double kappa = g * (p.sys.H0 + 2.0 * p.bath.gamma * p.mz / tau);
  const double dmx0 = p.dmx0.value_or(kappa * p.my0);
  const double dmy0 = p.dmy0.value_or(-kappa * p.mx0);

  // state (mx, my, mx', my')
  auto f = [&](const std::array<double, 4>& v) {
    return std::array<double, 4>{v[2], v[3], -a * v[2] + b * v[3] + c * v[1], -a * v[3] - b * v[2] - c * v[0]};
  };

  Trajectory tr{grid, std::vector<SpinState>(grid.n)};
  std::array<double, 4> y{p.mx0, p.my0, dmx0, dmy0};
  tr.states[0] = {y[0], y[1], p.mz};
  for (std::size_t i = 1; i < grid.n; ++i) {
    y = rk4_step<4>(f, y, grid.dt);
    tr.states[i] = {y[0], y[1], p.mz};
  }
  return tr;
}

}  // namespace spinlangevin

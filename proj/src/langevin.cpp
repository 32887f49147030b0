#include <spinlangevin/langevin.hpp>

#include <algorithm>
#include <array>
#include <cmath>

namespace spinlangevin {

namespace {

using Vec = std::array<double, 3>;

Vec operator+(const Vec& a, const Vec& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec operator-(const Vec& a, const Vec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec operator*(double s, const Vec& a) { return {s * a[0], s * a[1], s * a[2]}; }
double dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

// dM/dt = M x w over dt: rotation of M by -|w| dt about w.
Vec rotate(const Vec& m, const Vec& w, double dt) {
  const double len = norm(w);
  if (len == 0.0) return m;
  const Vec n = (1.0 / len) * w;
  const double theta = -len * dt;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return c * m + s * cross(n, m) + (dot(n, m) * (1.0 - c)) * n;
}

constexpr int max_iterations = 100;

}  // namespace

Trajectory integrate_trajectory(const SpinState& state0, const NoisePath& noise, const BathSpec& bath,
                                const SpinSystem& sys, const TimeGrid& grid, const LangevinOptions& opts) {
  validate(sys);
  validate(bath);
  if (!(state0.norm() > 0.0)) throw DomainError("initial spin state must be nonzero");
  if (noise.grid.n != grid.n || noise.grid.dt != grid.dt) throw DomainError("noise path does not match the time grid");

  double fmax = 0.0;
  for (std::size_t k = 0; k < grid.n; ++k)
    fmax = std::max(fmax, std::sqrt(noise.fx[k] * noise.fx[k] + noise.fy[k] * noise.fy[k] + noise.fz[k] * noise.fz[k]));
  if (grid.dt * sys.g * (sys.H0 + fmax) > 0.5) throw StepError("rotation angle per step exceeds 0.5 rad");

  const double g = sys.g;
  const double dt = grid.dt;
  const double scale = state0.norm();
  const double beta = 2.0 * bath.gamma * g * opts.delta_weight;
  const bool drude = bath.kind == BathKind::Drude;
  const double decay = drude ? std::exp(-dt / bath.tau) : 0.0;
  const double gain = drude ? bath.gamma * -std::expm1(-dt / bath.tau) / dt : 0.0;

  Trajectory tr{grid, std::vector<SpinState>(grid.n)};
  Vec m{state0.mx, state0.my, state0.mz};
  Vec y{0.0, 0.0, 0.0};
  tr.states[0] = state0;
  for (std::size_t k = 0; k + 1 < grid.n; ++k) {
    const Vec f{0.5 * (noise.fx[k] + noise.fx[k + 1]), 0.5 * (noise.fy[k] + noise.fy[k + 1]),
                0.5 * (noise.fz[k] + noise.fz[k + 1])};
    const Vec h = Vec{0.0, 0.0, sys.H0} - f;
    Vec next = m;
    Vec y_next = y;
    bool converged = false;
    for (int it = 0; it < max_iterations; ++it) {
      Vec w;
      if (drude) {
        y_next = decay * y + gain * (next - m);
        w = g * (h - 0.5 * (y + y_next));
      } else {
        const Vec mid = 0.5 * (m + next);
        w = (g / (1.0 + beta * beta * dot(mid, mid))) * (h - beta * cross(mid, h));
      }
      const Vec trial = rotate(m, w, dt);
      const double change = norm(trial - next);
      next = trial;
      if (change <= 1e-15 * scale) {
        converged = true;
        break;
      }
    }
    if (!converged) throw StepError("implicit midpoint iteration did not converge; reduce dt");
    if (drude) y = decay * y + gain * (next - m);
    m = next;
    tr.states[k + 1] = {m[0], m[1], m[2]};
  }
  return tr;
}

}  // namespace spinlangevin

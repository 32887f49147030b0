#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include <spinlangevin/errors.hpp>

namespace spinlangevin {

using cplx = std::complex<double>;

enum class MomentConvention { SqrtSSplus1, SOnly };

struct SpinSystem {
  double S = 0.5;
  double g = 1.0;
  double H0 = 0.0;
  MomentConvention convention = MomentConvention::SqrtSSplus1;
};

// Throws DomainError unless S is a positive half-integer, g > 0 and H0 >= 0.
void validate(const SpinSystem& sys);

enum class BathKind { Ohmic, Drude };

struct BathSpec {
  BathKind kind = BathKind::Ohmic;
  double gamma = 0.0;
  double Omega = 0.0;  // cutoff, Ohmic only
  double tau = 0.0;    // memory time, Drude only

  static BathSpec ohmic(double gamma, double Omega) { return {BathKind::Ohmic, gamma, Omega, 0.0}; }
  static BathSpec drude(double gamma, double tau) { return {BathKind::Drude, gamma, 0.0, tau}; }
};

void validate(const BathSpec& bath);

struct ThermalEnv {
  double T = 1.0;
  double kB = 1.0;
  double hbar = 1.0;

  double omega_th() const { return 2.0 * kB * T / hbar; }
};

void validate(const ThermalEnv& env);

struct TimeGrid {
  double t0 = 0.0;
  double dt = 1.0;
  std::size_t n = 2;

  TimeGrid() = default;
  TimeGrid(double t0, double dt, std::size_t n);

  // Computed from the index, never accumulated.
  double operator[](std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
  double end() const { return (*this)[n - 1]; }
};

struct FrequencyGrid {
  double omega0 = 0.0;
  double domega = 1.0;
  std::size_t n = 2;

  FrequencyGrid() = default;
  FrequencyGrid(double omega0, double domega, std::size_t n);

  double operator[](std::size_t k) const { return omega0 + static_cast<double>(k) * domega; }
};

struct SpinState {
  double mx = 0.0;
  double my = 0.0;
  double mz = 0.0;

  double norm() const { return std::sqrt(mx * mx + my * my + mz * mz); }
};

template <class Grid, class Value>
struct Sampled {
  Grid grid;
  std::vector<Value> values;

  Sampled() = default;
  Sampled(Grid g, std::vector<Value> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.n) throw DomainError("sample count does not match grid size");
  }
  explicit Sampled(Grid g) : grid(g), values(g.n) {}
};

using Series = Sampled<TimeGrid, double>;
using ComplexSeries = Sampled<TimeGrid, cplx>;
using Spectrum = Sampled<FrequencyGrid, cplx>;
using RealSpectrum = Sampled<FrequencyGrid, double>;

struct Trajectory {
  TimeGrid grid;
  std::vector<SpinState> states;
};

double total_moment(const SpinSystem& sys);

// sqrt(M^2 - mz^2); |mz| may exceed M by 1e-12 (relative) and is then clamped.
double transverse_moment(const SpinSystem& sys, double mz);

}  // namespace spinlangevin

#include <spinlangevin/errors.hpp>
#include <spinlangevin/types.hpp>

#include <cmath>

namespace spinlangevin {

void validate(const SpinSystem& sys) {
  const double twice = 2.0 * sys.S;
  if (!(sys.S > 0.0) || std::abs(twice - std::round(twice)) > 1e-12)
    throw DomainError("spin S must be a positive half-integer");
  if (!(sys.g > 0.0)) throw DomainError("gyromagnetic ratio g must be positive");
  if (!(sys.H0 >= 0.0) || !std::isfinite(sys.H0)) throw DomainError("field H0 must be finite and >= 0");
}

void validate(const BathSpec& bath) {
  if (!(bath.gamma >= 0.0) || !std::isfinite(bath.gamma)) throw DomainError("gamma must be finite and >= 0");
  if (bath.kind == BathKind::Ohmic && !(bath.Omega > 0.0)) throw DomainError("Ohmic bath needs Omega > 0");
  if (bath.kind == BathKind::Drude && !(bath.tau > 0.0)) throw DomainError("Drude bath needs tau > 0");
}

void validate(const ThermalEnv& env) {
  if (!(env.T > 0.0)) throw DomainError("temperature must be positive");
  if (!(env.kB > 0.0)) throw DomainError("kB must be positive");
  if (!(env.hbar > 0.0)) throw DomainError("hbar must be positive");
}

TimeGrid::TimeGrid(double t0_, double dt_, std::size_t n_) : t0(t0_), dt(dt_), n(n_) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("time step must be positive");
  if (n < 2) throw DomainError("time grid needs at least two samples");
}

FrequencyGrid::FrequencyGrid(double omega0_, double domega_, std::size_t n_)
    : omega0(omega0_), domega(domega_), n(n_) {
  if (!(domega > 0.0)) throw DomainError("frequency step must be positive");
  if (n < 2) throw DomainError("frequency grid needs at least two samples");
}

double total_moment(const SpinSystem& sys) {
  if (sys.convention == MomentConvention::SOnly) return sys.g * sys.S;
  return sys.g * std::sqrt(sys.S * (sys.S + 1.0));
}

double transverse_moment(const SpinSystem& sys, double mz) {
  const double M = total_moment(sys);
  const double excess = std::abs(mz) - M;
  if (excess > 1e-12 * M) throw DomainError("|mz| exceeds the total moment");
  if (excess >= 0.0) return 0.0;
  return std::sqrt((M - mz) * (M + mz));
}

}  // namespace spinlangevin

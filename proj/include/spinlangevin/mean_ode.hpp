#pragma once

#include <spinlangevin/types.hpp>

#include <optional>

namespace spinlangevin {

enum class MeanOdeKind { OhmicFirstOrder, DrudeSecondOrder };

struct MeanOdeProblem {
  MeanOdeKind kind = MeanOdeKind::OhmicFirstOrder;
  SpinSystem sys;
  BathSpec bath;
  double mz = 0.0;
  double mx0 = 0.0;
  double my0 = 0.0;
  // Drude only. Default: dmx0 = kappa my0, dmy0 = -kappa mx0 with kappa = g (H0 + 2 gamma mz / tau).
  std::optional<double> dmx0;
  std::optional<double> dmy0;
};

// Classical RK4 on the factorized mean equations. mz is held constant in the returned states.
Trajectory integrate_ohmic_mean(const MeanOdeProblem& p, const TimeGrid& grid);
Trajectory integrate_drude_mean(const MeanOdeProblem& p, const TimeGrid& grid);

}  // namespace spinlangevin

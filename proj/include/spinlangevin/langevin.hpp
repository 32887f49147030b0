#pragma once

#include <spinlangevin/noise.hpp>
#include <spinlangevin/types.hpp>

namespace spinlangevin {

struct LangevinOptions {
  // Weight of the Ohmic delta kernel at the interval endpoint: 1 gives friction 2 gamma dM/dt,
  // 0.5 the half-delta convention.
  double delta_weight = 1.0;
};

// dM/dt = g M x (H0 z - f - friction), friction = 2 gamma w dM/dt (Ohmic) or the
// exponentially weighted history Y(t) = int (gamma/tau) exp(-(t-s)/tau) dM/ds ds (Drude).
// Each step solves the implicit midpoint rule by fixed-point iteration and applies it as an
// exact rotation, so |M| is conserved to rounding. The noise is averaged over the step ends.
// Throws StepError if dt g (H0 + max|f|) > 0.5.
Trajectory integrate_trajectory(const SpinState& state0, const NoisePath& noise, const BathSpec& bath,
                                const SpinSystem& sys, const TimeGrid& grid, const LangevinOptions& opts = {});

}  // namespace spinlangevin

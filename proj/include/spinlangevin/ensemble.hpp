#pragma once

#include <spinlangevin/langevin.hpp>
#include <spinlangevin/noise.hpp>

#include <cstdint>
#include <vector>

namespace spinlangevin {

struct EnsembleProblem {
  SpinSystem sys;
  BathSpec bath;
  ThermalEnv env;
  TimeGrid grid;
  SpinState state0;
  double mass = 1.0;
  bool quantum_noise = true;
  LangevinOptions options;
};

struct EnsembleStats {
  TimeGrid grid;
  std::size_t n = 0;
  std::vector<double> mean_mx, mean_my, mean_mz;
  std::vector<double> se_mx, se_my, se_mz;  // sample std / sqrt(n); +inf for n = 1
  std::vector<double> c_hat, se_c;          // <M(t) . M(0)>
  double max_norm_drift = 0.0;              // max over trajectories and t of ||M(t)| - |M(0)|| / |M(0)|
};

// Trajectory k uses seed seed_base + k. Trajectories run in parallel in fixed blocks and
// the block statistics are merged in index order, so results do not depend on scheduling.
EnsembleStats ensemble_statistics(std::size_t n, std::uint64_t seed_base, const EnsembleProblem& problem);

// Worker count: hardware concurrency, capped by SPINLANGEVIN_THREADS when set.
std::size_t worker_count();

}  // namespace spinlangevin

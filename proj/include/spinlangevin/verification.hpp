#pragma once

#include <spinlangevin/ohmic.hpp>
#include <spinlangevin/types.hpp>

#include <vector>

namespace spinlangevin {

struct FdtRoundtrip {
  std::vector<double> t;
  std::vector<double> r2_fft;     // Im R''(t) from the FFT pipeline
  std::vector<double> r2_closed;  // Im R''(t) from the closed form
  double rel_l2 = 0.0;            // ||fft - closed|| / ||closed|| over the returned points
};

// C(t) - mz^2 sampled on n_half points over window_tau_r * tau_R, transformed, multiplied by
// tanh(w/Omega_th)/hbar and transformed back; compared against the closed form on [0, 3 tau_R].
FdtRoundtrip fdt_roundtrip(const OhmicDerived& d, const ThermalEnv& env, double M, std::size_t n_half,
                           double window_tau_r);

struct KkRoundtrip {
  std::vector<double> omega;
  std::vector<double> r1_pv;      // principal-value transform of the closed-form R''(w)
  std::vector<double> r1_closed;  // Re of the closed-form R'(w)
  double rel_err = 0.0;           // max |pv - closed| / max |closed|
};

// R''(w) sampled on `points` nodes spanning span_b * B centered on 0, transformed at
// n_eval frequencies evenly covering [-2B, 2B].
KkRoundtrip kk_roundtrip(const OhmicDerived& d, const ThermalEnv& env, double span_b, std::size_t points,
                         std::size_t n_eval);

}  // namespace spinlangevin

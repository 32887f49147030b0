#include <spinlangevin/ensemble.hpp>

#include "parallel.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace spinlangevin {

std::size_t worker_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("SPINLANGEVIN_THREADS")) {
    try {
      const long v = std::stol(cap);
      if (v >= 1) n = std::min(n, static_cast<std::size_t>(v));
    } catch (const std::exception&) {
    }
  }
  return n;
}

namespace {

constexpr std::size_t block_size = 64;
constexpr std::size_t channels = 4;  // mx, my, mz, M(t).M(0)

// Per-time-point running mean and sum of squared deviations.
struct Accumulator {
  std::size_t count = 0;
  std::vector<double> mean, m2;
  double drift = 0.0;

  explicit Accumulator(std::size_t len) : mean(len, 0.0), m2(len, 0.0) {}

  void add(const std::vector<double>& x) {
    ++count;
    const double inv = 1.0 / static_cast<double>(count);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - mean[i];
      mean[i] += d * inv;
      m2[i] += d * (x[i] - mean[i]);
    }
  }

  void merge(const Accumulator& o) {
    if (o.count == 0) return;
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(o.count);
    const double n = na + nb;
    for (std::size_t i = 0; i < mean.size(); ++i) {
      const double d = o.mean[i] - mean[i];
      mean[i] += d * nb / n;
      m2[i] += o.m2[i] + d * d * na * nb / n;
    }
    count += o.count;
    drift = std::max(drift, o.drift);
  }
};

}  // namespace

EnsembleStats ensemble_statistics(std::size_t n, std::uint64_t seed_base, const EnsembleProblem& p) {
  if (n == 0) throw DomainError("ensemble needs at least one trajectory");
  const std::size_t len = p.grid.n;
  const NoiseSpectrum spectrum{p.bath, p.env, p.mass, p.quantum_noise};
  const std::size_t blocks = (n + block_size - 1) / block_size;
  std::vector<Accumulator> partial(blocks, Accumulator(channels * len));

  detail::parallel_for(blocks, [&](std::size_t b) {
    Accumulator& acc = partial[b];
    std::vector<double> row(channels * len);
    const std::size_t end = std::min(n, (b + 1) * block_size);
    for (std::size_t k = b * block_size; k < end; ++k) {
      const auto noise = synthesize_noise(spectrum, p.grid, seed_base + k);
      const auto tr = integrate_trajectory(p.state0, noise, p.bath, p.sys, p.grid, p.options);
      const SpinState& s0 = tr.states[0];
      const double n0 = s0.norm();
      for (std::size_t t = 0; t < len; ++t) {
        const SpinState& s = tr.states[t];
        row[t] = s.mx;
        row[len + t] = s.my;
        row[2 * len + t] = s.mz;
        row[3 * len + t] = s.mx * s0.mx + s.my * s0.my + s.mz * s0.mz;
        acc.drift = std::max(acc.drift, std::abs(s.norm() - n0) / n0);
      }
      acc.add(row);
    }
  });

  Accumulator total(channels * len);
  for (const auto& acc : partial) total.merge(acc);

  EnsembleStats st;
  st.grid = p.grid;
  st.n = n;
  st.max_norm_drift = total.drift;
  auto slice = [&](std::size_t ch, std::vector<double>& mean, std::vector<double>& se) {
    mean.assign(total.mean.begin() + ch * len, total.mean.begin() + (ch + 1) * len);
    se.resize(len);
    for (std::size_t t = 0; t < len; ++t) {
      if (n < 2) {
        se[t] = std::numeric_limits<double>::infinity();
      } else {
        const double var = total.m2[ch * len + t] / static_cast<double>(n - 1);
        se[t] = std::sqrt(var / static_cast<double>(n));
      }
    }
  };
  slice(0, st.mean_mx, st.se_mx);
  slice(1, st.mean_my, st.se_my);
  slice(2, st.mean_mz, st.se_mz);
  slice(3, st.c_hat, st.se_c);
  return st;
}

}  // namespace spinlangevin

#pragma once

#include <spinlangevin/ensemble.hpp>
#include <spinlangevin/equilibrium.hpp>
#include <spinlangevin/types.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spinlangevin {

enum class Mode { Equilibrium, Ohmic, Drude, Simulate, FdtCheck, KkCheck, SweepTauR };

Mode parse_mode(const std::string& name);
std::string mode_name(Mode m);

// Raw key=value settings. Every key has a default; unknown keys are rejected.
class Settings {
 public:
  Settings();

  // "key = value" lines, '#' starts a comment. Keys "version" and "derived.*" (written
  // into .meta files) are skipped so a meta file can be fed back as a config.
  void load(const std::string& text);
  void set(const std::string& key, const std::string& value, int line = 0);
  const std::string& get(const std::string& key) const;
  int line_of(const std::string& key) const;
  bool is_known(const std::string& key) const;
  const std::vector<std::string>& keys() const { return order_; }

 private:
  std::vector<std::string> order_;
  std::map<std::string, std::string> values_;
  std::map<std::string, int> lines_;
};

enum class SweepAxis { T, H0, Gamma };

struct AxisSpec {
  SweepAxis axis = SweepAxis::T;
  double min = 0.0;
  double max = 1.0;
  std::size_t steps = 2;
  bool log = false;

  double value(std::size_t i) const;
};

struct ScenarioConfig {
  Mode mode = Mode::Ohmic;
  SpinSystem sys;
  BathSpec bath;
  ThermalEnv env;
  TimeGrid grid;
  std::size_t ensemble_n = 100;
  std::uint64_t seed = 42;
  double mz = 0.0;
  double mx0 = 0.0;
  double my0 = 0.0;
  MzSign sign = MzSign::AlignedPositive;
  double mass = 1.0;
  double delta_weight = 1.0;
  bool quantum_spectrum = true;
  double fdt_window = 16.0;  // transform window in units of tau_R
  double kk_span = 20.0;     // frequency grid width in units of B
  std::size_t kk_points = 8001;
  AxisSpec axis1, axis2;
  std::map<std::string, std::string> resolved;  // every key with its final value, for .meta
  std::map<std::string, double> derived;
};

// Validates and fills in "auto" values (mz from equilibrium, default initial moments,
// time step and sample count). Throws ConfigError naming the offending key.
ScenarioConfig resolve(const Settings& s, Mode mode);

// Writes <prefix>.csv and <prefix>.meta.
void run_scenario(const ScenarioConfig& cfg, const std::string& prefix);

// Relaxation-time map; rows are (axis1, axis2, tau_R) with axis1 varying slowest.
std::vector<std::vector<double>> sweep_relaxation_map(const ScenarioConfig& cfg);

std::string artifact_version();

}  // namespace spinlangevin

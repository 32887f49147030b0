#include <spinlangevin/csv.hpp>
#include <spinlangevin/drude.hpp>
#include <spinlangevin/ohmic.hpp>
#include <spinlangevin/scenario.hpp>
#include <spinlangevin/verification.hpp>

#include "parallel.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace spinlangevin {

std::string artifact_version() { return SPINLANGEVIN_VERSION; }

namespace {

const std::vector<std::pair<std::string, std::string>>& defaults() {
  static const std::vector<std::pair<std::string, std::string>> d = {
      {"mode", "auto"},
      {"S", "0.5"},
      {"g", "1"},
      {"H0", "8"},
      {"moment_convention", "sqrt_s_splus1"},
      {"bath", "auto"},
      {"gamma", "5"},
      {"Omega", "1e6"},
      {"tau", "1"},
      {"T", "10"},
      {"kB", "1"},
      {"hbar", "1"},
      {"t0", "0"},
      {"dt", "auto"},
      {"n", "auto"},
      {"ensemble_n", "100"},
      {"seed", "42"},
      {"mz", "auto"},
      {"mx0", "auto"},
      {"my0", "auto"},
      {"sign", "aligned_positive"},
      {"mass", "1"},
      {"delta_weight", "1"},
      {"spectrum", "quantum"},
      {"fdt_window", "16"},
      {"kk_span", "20"},
      {"kk_points", "8001"},
      {"axis1", "T"},
      {"axis1_min", "0.01"},
      {"axis1_max", "10"},
      {"axis1_steps", "20"},
      {"axis1_log", "true"},
      {"axis2", "H0"},
      {"axis2_min", "0.1"},
      {"axis2_max", "10"},
      {"axis2_steps", "20"},
      {"axis2_log", "true"},
  };
  return d;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Mode parse_mode(const std::string& name) {
  if (name == "equilibrium") return Mode::Equilibrium;
  if (name == "ohmic") return Mode::Ohmic;
  if (name == "drude") return Mode::Drude;
  if (name == "simulate") return Mode::Simulate;
  if (name == "fdt-check") return Mode::FdtCheck;
  if (name == "kk-check") return Mode::KkCheck;
  if (name == "sweep-tauR") return Mode::SweepTauR;
  throw ConfigError("unknown mode '" + name + "'");
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Equilibrium: return "equilibrium";
    case Mode::Ohmic: return "ohmic";
    case Mode::Drude: return "drude";
    case Mode::Simulate: return "simulate";
    case Mode::FdtCheck: return "fdt-check";
    case Mode::KkCheck: return "kk-check";
    case Mode::SweepTauR: return "sweep-tauR";
  }
  return "?";
}

Settings::Settings() {
  for (const auto& [k, v] : defaults()) {
    order_.push_back(k);
    values_[k] = v;
  }
}

bool Settings::is_known(const std::string& key) const { return values_.count(key) != 0; }

void Settings::set(const std::string& key, const std::string& value, int line) {
  if (!is_known(key)) throw ConfigError("unknown key '" + key + "'", line);
  if (value.empty()) throw ConfigError("empty value for '" + key + "'", line);
  values_[key] = value;
  lines_[key] = line;
}

const std::string& Settings::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown key '" + key + "'");
  return it->second;
}

int Settings::line_of(const std::string& key) const {
  const auto it = lines_.find(key);
  return it == lines_.end() ? 0 : it->second;
}

void Settings::load(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key=value", line);
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key == "version" || key.rfind("derived.", 0) == 0) continue;
    set(key, value, line);
  }
}

double AxisSpec::value(std::size_t i) const {
  const double f = static_cast<double>(i) / static_cast<double>(steps - 1);
  if (log) return min * std::pow(max / min, f);
  return min + (max - min) * f;
}

namespace {

class Resolver {
 public:
  explicit Resolver(const Settings& s) : s_(s) {}

  [[noreturn]] void fail(const std::string& key, const std::string& why) const {
    throw ConfigError(key + ": " + why, s_.line_of(key));
  }

  const std::string& str(const std::string& key) const { return s_.get(key); }
  bool is_auto(const std::string& key) const { return str(key) == "auto"; }

  double num(const std::string& key) const {
    try {
      return parse_number(str(key));
    } catch (const DomainError&) {
      fail(key, "expected a number, got '" + str(key) + "'");
    }
  }

  double positive(const std::string& key) const {
    const double v = num(key);
    if (!(v > 0.0) || !std::isfinite(v)) fail(key, "must be positive and finite");
    return v;
  }

  std::uint64_t integer(const std::string& key, std::uint64_t min) const {
    const double v = num(key);
    if (!(v >= static_cast<double>(min)) || v != std::floor(v) || v > 9e15) fail(key, "expected an integer >= " + std::to_string(min));
    return static_cast<std::uint64_t>(v);
  }

  bool flag(const std::string& key) const {
    const auto& v = str(key);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail(key, "expected true or false");
  }

 private:
  const Settings& s_;
};

SweepAxis parse_axis(const Resolver& r, const std::string& key) {
  const auto& v = r.str(key);
  if (v == "T") return SweepAxis::T;
  if (v == "H0") return SweepAxis::H0;
  if (v == "gamma") return SweepAxis::Gamma;
  r.fail(key, "expected T, H0 or gamma");
}

const char* axis_name(SweepAxis a) {
  switch (a) {
    case SweepAxis::T: return "T";
    case SweepAxis::H0: return "H0";
    case SweepAxis::Gamma: return "gamma";
  }
  return "?";
}

AxisSpec parse_axis_spec(const Resolver& r, const std::string& prefix) {
  AxisSpec a;
  a.axis = parse_axis(r, prefix);
  a.min = r.num(prefix + "_min");
  a.max = r.num(prefix + "_max");
  a.steps = static_cast<std::size_t>(r.integer(prefix + "_steps", 2));
  a.log = r.flag(prefix + "_log");
  if (!(a.min < a.max)) r.fail(prefix + "_min", "must be below " + prefix + "_max");
  if (a.log && !(a.min > 0.0)) r.fail(prefix + "_min", "log axis needs a positive minimum");
  if (a.axis == SweepAxis::T && !(a.min > 0.0)) r.fail(prefix + "_min", "temperature must be positive");
  if (a.min < 0.0) r.fail(prefix + "_min", "must be >= 0");
  return a;
}

}  // namespace

ScenarioConfig resolve(const Settings& s, Mode mode) {
  Resolver r(s);
  ScenarioConfig cfg;
  cfg.mode = mode;

  cfg.sys.S = r.num("S");
  cfg.sys.g = r.num("g");
  cfg.sys.H0 = r.num("H0");
  const auto& conv = r.str("moment_convention");
  if (conv == "sqrt_s_splus1") cfg.sys.convention = MomentConvention::SqrtSSplus1;
  else if (conv == "s_only") cfg.sys.convention = MomentConvention::SOnly;
  else r.fail("moment_convention", "expected sqrt_s_splus1 or s_only");
  try {
    validate(cfg.sys);
  } catch (const DomainError& e) {
    r.fail("S", e.what());
  }

  std::string bath = r.str("bath");
  if (bath == "auto") bath = mode == Mode::Drude ? "drude" : "ohmic";
  cfg.bath.gamma = r.num("gamma");
  if (bath == "ohmic") {
    cfg.bath.kind = BathKind::Ohmic;
    cfg.bath.Omega = r.positive("Omega");
  } else if (bath == "drude") {
    cfg.bath.kind = BathKind::Drude;
    cfg.bath.tau = r.positive("tau");
  } else {
    r.fail("bath", "expected ohmic or drude");
  }
  if (!(cfg.bath.gamma >= 0.0)) r.fail("gamma", "must be >= 0");
  const bool needs_ohmic = mode == Mode::Ohmic || mode == Mode::FdtCheck || mode == Mode::KkCheck ||
                           mode == Mode::SweepTauR;
  if (needs_ohmic && cfg.bath.kind != BathKind::Ohmic) r.fail("bath", mode_name(mode) + " requires the Ohmic bath");
  if (mode == Mode::Drude && cfg.bath.kind != BathKind::Drude) r.fail("bath", "drude mode requires the Drude bath");

  cfg.env.T = r.positive("T");
  cfg.env.kB = r.positive("kB");
  cfg.env.hbar = r.positive("hbar");

  const auto& sign = r.str("sign");
  if (sign == "aligned_positive") cfg.sign = MzSign::AlignedPositive;
  else if (sign == "anti_aligned") cfg.sign = MzSign::AntiAligned;
  else r.fail("sign", "expected aligned_positive or anti_aligned");

  const double M = total_moment(cfg.sys);
  cfg.mz = r.is_auto("mz") ? equilibrium_mz(cfg.sys, cfg.env, cfg.sign).mz : r.num("mz");
  double mxy = 0.0;
  try {
    mxy = transverse_moment(cfg.sys, cfg.mz);
  } catch (const DomainError& e) {
    r.fail("mz", e.what());
  }
  cfg.mx0 = r.is_auto("mx0") ? std::sqrt(3.0 / 5.0) * mxy : r.num("mx0");
  cfg.my0 = r.is_auto("my0") ? std::sqrt(2.0 / 5.0) * mxy : r.num("my0");
  if (cfg.mx0 * cfg.mx0 + cfg.my0 * cfg.my0 > mxy * mxy + 1e-12 * M * M)
    r.fail("mx0", "initial transverse moment exceeds sqrt(M^2 - mz^2)");

  cfg.mass = r.positive("mass");
  cfg.delta_weight = r.num("delta_weight");
  if (!(cfg.delta_weight > 0.0 && cfg.delta_weight <= 1.0)) r.fail("delta_weight", "must lie in (0, 1]");
  const auto& spectrum = r.str("spectrum");
  if (spectrum == "quantum") cfg.quantum_spectrum = true;
  else if (spectrum == "classical") cfg.quantum_spectrum = false;
  else r.fail("spectrum", "expected quantum or classical");
  cfg.fdt_window = r.positive("fdt_window");
  cfg.kk_span = r.positive("kk_span");
  if (cfg.kk_span <= 4.0) r.fail("kk_span", "must exceed 4 so that [-2B, 2B] lies inside the grid");
  cfg.kk_points = static_cast<std::size_t>(r.integer("kk_points", 16));
  cfg.ensemble_n = static_cast<std::size_t>(r.integer("ensemble_n", 1));
  cfg.seed = r.integer("seed", 0);
  if (mode == Mode::SweepTauR) {
    cfg.axis1 = parse_axis_spec(r, "axis1");
    cfg.axis2 = parse_axis_spec(r, "axis2");
    if (cfg.axis1.axis == cfg.axis2.axis) r.fail("axis2", "must differ from axis1");
  }

  // Derived quantities used to pick the time grid.
  double tau_r = std::numeric_limits<double>::infinity();
  double omega = cfg.sys.g * cfg.sys.H0;
  if (cfg.bath.kind == BathKind::Ohmic) {
    const auto d = derive_ohmic(cfg.sys, cfg.bath, cfg.mz, cfg.mx0, cfg.my0);
    tau_r = d.tau_r;
    omega = d.omega_tilde;
    cfg.derived["tau_R"] = d.tau_r;
    cfg.derived["omega_tilde"] = d.omega_tilde;
    cfg.derived["A"] = d.A;
    cfg.derived["B"] = d.B;
  } else {
    const auto dc = derive_drude(cfg.sys, cfg.bath, cfg.mz);
    cfg.derived["a"] = dc.a;
    cfg.derived["b"] = dc.b;
    cfg.derived["c"] = dc.c;
    cfg.derived["decay_rate"] = drude_decay_rate(dc);
  }
  cfg.derived["M"] = M;
  cfg.derived["mxy"] = mxy;

  std::size_t n = 0;
  if (r.is_auto("n")) {
    switch (mode) {
      case Mode::Simulate: n = 256; break;
      case Mode::FdtCheck: n = (std::size_t{1} << 15) + 1; break;
      default: n = 1001; break;
    }
  } else {
    n = static_cast<std::size_t>(r.integer("n", 2));
  }
  if (mode == Mode::Simulate && (n & (n - 1)) != 0) r.fail("n", "simulate needs a power-of-two sample count");

  double dt = 0.0;
  if (!r.is_auto("dt")) {
    dt = r.positive("dt");
  } else {
    const bool finite_tau = std::isfinite(tau_r) && tau_r > 0.0;
    const double period = omega > 0.0 ? 2.0 * std::numbers::pi / omega : 0.0;
    switch (mode) {
      case Mode::Ohmic:
        if (finite_tau) dt = 5.0 * tau_r / static_cast<double>(n - 1);
        else if (period > 0.0) dt = 10.0 * period / static_cast<double>(n - 1);
        break;
      case Mode::Drude:
        dt = 10.0 * cfg.bath.tau / static_cast<double>(n - 1);
        break;
      case Mode::FdtCheck:
        if (finite_tau) dt = cfg.fdt_window * tau_r / static_cast<double>(n - 1);
        break;
      case Mode::Simulate:
        if (cfg.bath.kind == BathKind::Ohmic) {
          if (finite_tau) dt = tau_r / 50.0;
          else if (period > 0.0) dt = period / 100.0;
          if (dt > 0.0) dt = std::min(dt, 0.1 * std::numbers::pi / cfg.bath.Omega);
        } else {
          const double rate = std::max({cfg.derived["a"], std::abs(cfg.derived["b"]),
                                        std::sqrt(std::abs(cfg.derived["c"])), cfg.sys.g * cfg.sys.H0});
          dt = std::min(0.02 / rate, 0.1 * std::numbers::pi * cfg.bath.tau / 10.0);
        }
        break;
      default:
        dt = 1.0;
        break;
    }
    if (!(dt > 0.0)) r.fail("dt", "cannot be chosen automatically for these parameters; set it explicitly");
  }
  cfg.grid = TimeGrid(r.num("t0"), dt, n);

  // Everything that determines the run, in key order, with "auto" replaced.
  for (const auto& key : s.keys()) cfg.resolved[key] = s.get(key);
  cfg.resolved["mode"] = mode_name(mode);
  cfg.resolved["bath"] = bath;
  cfg.resolved["mz"] = format_number(cfg.mz);
  cfg.resolved["mx0"] = format_number(cfg.mx0);
  cfg.resolved["my0"] = format_number(cfg.my0);
  cfg.resolved["dt"] = format_number(cfg.grid.dt);
  cfg.resolved["n"] = std::to_string(cfg.grid.n);
  return cfg;
}

std::vector<std::vector<double>> sweep_relaxation_map(const ScenarioConfig& cfg) {
  const std::size_t n1 = cfg.axis1.steps;
  const std::size_t n2 = cfg.axis2.steps;
  std::vector<std::vector<double>> rows(n1 * n2);
  detail::parallel_for(n1 * n2, [&](std::size_t idx) {
    const std::size_t i = idx / n2;
    const std::size_t j = idx % n2;
    SpinSystem sys = cfg.sys;
    BathSpec bath = cfg.bath;
    ThermalEnv env = cfg.env;
    auto assign = [&](SweepAxis axis, double v) {
      switch (axis) {
        case SweepAxis::T: env.T = v; break;
        case SweepAxis::H0: sys.H0 = v; break;
        case SweepAxis::Gamma: bath.gamma = v; break;
      }
    };
    const double v1 = cfg.axis1.value(i);
    const double v2 = cfg.axis2.value(j);
    assign(cfg.axis1.axis, v1);
    assign(cfg.axis2.axis, v2);
    const double mz = equilibrium_mz(sys, env, cfg.sign).mz;
    const auto d = derive_ohmic(sys, bath, mz, 0.0, 0.0);
    const double tau = d.tau_r > 0.0 ? d.tau_r : std::numeric_limits<double>::infinity();
    rows[idx] = {v1, v2, tau};
  });
  return rows;
}

namespace {

CsvTable run_mode(const ScenarioConfig& cfg) {
  CsvTable t;
  const double M = total_moment(cfg.sys);
  switch (cfg.mode) {
    case Mode::Equilibrium: {
      const auto eq = equilibrium_mz(cfg.sys, cfg.env, cfg.sign);
      t.header = {"T", "H0", "x", "bs", "mz"};
      t.rows.push_back({cfg.env.T, cfg.sys.H0, eq.x, eq.bs, eq.mz});
      break;
    }
    case Mode::Ohmic: {
      const auto d = derive_ohmic(cfg.sys, cfg.bath, cfg.mz, cfg.mx0, cfg.my0);
      t.header = {"t", "mx", "my", "C", "R", "R_prime", "R_double_prime_imag"};
      for (std::size_t k = 0; k < cfg.grid.n; ++k) {
        const double tk = cfg.grid[k];
        const auto [mx, my] = mean_moments(d, tk);
        const auto resp = response_family(d, cfg.env, tk);
        t.rows.push_back({tk, mx, my, autocorrelation(d, M, tk), resp.r_total, resp.r_prime, resp.r_double_prime_imag});
      }
      break;
    }
    case Mode::Drude: {
      const auto dc = derive_drude(cfg.sys, cfg.bath, cfg.mz);
      t.header = {"t", "mx", "my", "C"};
      for (std::size_t k = 0; k < cfg.grid.n; ++k) {
        const double tk = cfg.grid[k];
        const auto [mx, my] = drude_mean_moments(dc, cfg.mx0, cfg.my0, tk);
        t.rows.push_back({tk, mx, my, drude_autocorrelation(dc, cfg.mz, cfg.mx0, cfg.my0, tk)});
      }
      break;
    }
    case Mode::Simulate: {
      EnsembleProblem p{cfg.sys, cfg.bath, cfg.env, cfg.grid, {cfg.mx0, cfg.my0, cfg.mz}, cfg.mass,
                        cfg.quantum_spectrum, LangevinOptions{cfg.delta_weight}};
      const auto st = ensemble_statistics(cfg.ensemble_n, cfg.seed, p);
      t.header = {"t", "mean_mx", "mean_my", "mean_mz", "se_mx", "se_my", "se_mz", "C_hat", "se_C", "C_analytic"};
      std::optional<OhmicDerived> od;
      std::optional<DrudeCoefficients> dd;
      if (cfg.bath.kind == BathKind::Ohmic) od = derive_ohmic(cfg.sys, cfg.bath, cfg.mz, cfg.mx0, cfg.my0);
      else dd = derive_drude(cfg.sys, cfg.bath, cfg.mz);
      for (std::size_t k = 0; k < cfg.grid.n; ++k) {
        const double tk = cfg.grid[k];
        const double rel = tk - cfg.grid.t0;
        const double ca = od ? autocorrelation(*od, M, rel) : drude_autocorrelation(*dd, cfg.mz, cfg.mx0, cfg.my0, rel);
        t.rows.push_back({tk, st.mean_mx[k], st.mean_my[k], st.mean_mz[k], st.se_mx[k], st.se_my[k], st.se_mz[k],
                          st.c_hat[k], st.se_c[k], ca});
      }
      break;
    }
    case Mode::FdtCheck: {
      const auto d = derive_ohmic(cfg.sys, cfg.bath, cfg.mz, cfg.mx0, cfg.my0);
      const auto res = fdt_roundtrip(d, cfg.env, M, cfg.grid.n, cfg.fdt_window);
      t.header = {"t", "R2_fft", "R2_closed"};
      for (std::size_t k = 0; k < res.t.size(); ++k) t.rows.push_back({res.t[k], res.r2_fft[k], res.r2_closed[k]});
      break;
    }
    case Mode::KkCheck: {
      const auto d = derive_ohmic(cfg.sys, cfg.bath, cfg.mz, cfg.mx0, cfg.my0);
      const auto res = kk_roundtrip(d, cfg.env, cfg.kk_span, cfg.kk_points, 201);
      t.header = {"omega", "R1_pv", "R1_closed"};
      for (std::size_t k = 0; k < res.omega.size(); ++k) t.rows.push_back({res.omega[k], res.r1_pv[k], res.r1_closed[k]});
      break;
    }
    case Mode::SweepTauR: {
      t.header = {"axis1", "axis2", "tauR"};
      t.rows = sweep_relaxation_map(cfg);
      break;
    }
  }
  return t;
}

}  // namespace

void run_scenario(const ScenarioConfig& cfg, const std::string& prefix) {
  const CsvTable table = run_mode(cfg);
  write_csv(prefix + ".csv", table);

  std::ostringstream meta;
  meta << "version=" << artifact_version() << '\n';
  for (const auto& [key, value] : defaults()) meta << key << '=' << cfg.resolved.at(key) << '\n';
  if (cfg.mode == Mode::SweepTauR) {
    meta << "derived.axis1=" << axis_name(cfg.axis1.axis) << '\n';
    meta << "derived.axis2=" << axis_name(cfg.axis2.axis) << '\n';
  }
  for (const auto& [key, value] : cfg.derived) meta << "derived." << key << '=' << format_number(value) << '\n';
  std::ofstream f(prefix + ".meta", std::ios::binary);
  if (!f) throw Error("cannot open " + prefix + ".meta for writing");
  f << meta.str();
}

}  // namespace spinlangevin

// spinlangevin <mode> --config <file> [--key value ...] --out <prefix>
//
// Any configuration key may be given as a flag; flags override the config file.
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <spinlangevin/errors.hpp>
#include <spinlangevin/scenario.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace sl = spinlangevin;

namespace {

void apply_overrides(sl::Settings& settings, const std::vector<std::string>& extras) {
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& tok = extras[i];
    if (tok.rfind("--", 0) != 0) throw sl::ConfigError("unexpected argument '" + tok + "'");
    std::string key = tok.substr(2);
    std::string value;
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key = key.substr(0, eq);
    } else {
      if (i + 1 >= extras.size()) throw sl::ConfigError("flag --" + key + " needs a value");
      value = extras[++i];
    }
    if (!settings.is_known(key)) throw sl::ConfigError("unknown flag --" + key);
    settings.set(key, value);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin relaxation in Ohmic and Drude heat baths"};
  app.allow_extras();
  std::string mode;
  std::string config;
  std::string out;
  app.add_option("mode", mode,
                 "equilibrium | ohmic | drude | simulate | fdt-check | kk-check | sweep-tauR")->required();
  app.add_option("--config", config, "key=value configuration file");
  app.add_option("--out", out, "output prefix for <prefix>.csv and <prefix>.meta")->required();
  app.set_version_flag("--version", sl::artifact_version());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    sl::Settings settings;
    if (!config.empty()) {
      std::ifstream f(config);
      if (!f) throw sl::ConfigError("cannot read config file " + config);
      std::stringstream buf;
      buf << f.rdbuf();
      try {
        settings.load(buf.str());
      } catch (const sl::ConfigError& e) {
        throw sl::ConfigError(config + ": " + e.what());
      }
    }
    apply_overrides(settings, app.remaining());
    const auto cfg = sl::resolve(settings, sl::parse_mode(mode));
    sl::run_scenario(cfg, out);
  } catch (const sl::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const sl::Error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 3;
  }
  return 0;
}

// wigner: bounds, sweeps, classical enumeration and QKD reports for the
// modified Wigner inequality.
//
//   wigner sweep     --theta-steps 200 --xi-steps 200 --out grid.csv
//   wigner bounds    --theta-min 0 --theta-max pi --theta-steps 1000
//   wigner bounds    --parametrization general
//   wigner classical --format json
//   wigner qkd       --theta-steps 500 --phase-steps 64
//   wigner verify    grid.csv
//
// Exit codes: 0 success, 2 config error, 3 numerical error, 4 I/O error.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wigner/angle.hpp"
#include "wigner/cli.hpp"
#include "wigner/errors.hpp"
#include "wigner/serialize.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

using wigner::ConfigError;
using wigner::IoError;

void write_output(const std::string& path, const std::function<void(std::ostream&)>& emit) {
  if (path.empty() || path == "-") {
    emit(std::cout);
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to standard output");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  emit(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

// key=value lines; '#' starts a comment. Keys are long flag names without
// the leading dashes; underscores are accepted in place of dashes.
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int line_no = 0;
  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string();
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config", path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    for (char& c : key) c = c == '_' ? '-' : c;
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

// Splices config-file values into argv for every option the command line
// did not set, so explicit flags win over the file, and the file over
// built-in defaults.
std::vector<std::string> apply_config_file(const CLI::App& app, std::vector<std::string> args) {
  std::string config_path;
  std::set<std::string> given;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0) continue;
    const std::string name = a.substr(2, a.find('=') - 2);
    if (name == "config") {
      if (a.find('=') != std::string::npos) {
        config_path = a.substr(a.find('=') + 1);
      } else if (i + 1 < args.size()) {
        config_path = args[i + 1];
      }
    }
    given.insert(name);
  }
  if (config_path.empty() || args.empty()) return args;

  const CLI::App* sub = nullptr;
  for (const CLI::App* candidate : app.get_subcommands({})) {
    if (candidate->get_name() == args.front()) sub = candidate;
  }
  if (sub == nullptr) return args;

  for (const auto& [key, value] : read_config_file(config_path)) {
    if (given.count(key) != 0) continue;
    bool known_anywhere = false;
    for (const CLI::App* candidate : app.get_subcommands({})) {
      if (candidate->get_option_no_throw("--" + key) != nullptr) known_anywhere = true;
    }
    if (!known_anywhere) throw ConfigError(key, "unknown key in config file");
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) continue;
    if (opt->get_type_size() == 0) {
      if (value == "true" || value == "1") args.push_back("--" + key);
    } else {
      args.push_back("--" + key + "=" + value);
    }
  }
  return args;
}

struct CommonOptions {
  std::string format = "csv";
  std::string out;
  std::string config;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--format", common.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", common.out, "Output file (default: standard output)");
  cmd->add_option("--config", common.config, "key=value file with option defaults");
}

struct AngleOption {
  std::string text;
  double value(const char* field) const { return wigner::parse_angle(text, field); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation bounds and QKD suitability for the modified Wigner inequality", "wigner"};
  app.require_subcommand(1);

  // sweep
  CommonOptions sweep_common;
  AngleOption sweep_theta_min{"0"}, sweep_theta_max{"pi"}, xi_min{"0"}, xi_max{"pi"};
  std::size_t sweep_theta_steps = 200, xi_steps = 200;
  double visibility = 1.0;
  CLI::App* sweep = app.add_subcommand("sweep", "W over a (theta, xi) grid for |phi(xi)> states");
  sweep->add_option("--theta-min", sweep_theta_min.text, "radians or pi fraction");
  sweep->add_option("--theta-max", sweep_theta_max.text, "radians or pi fraction");
  sweep->add_option("--theta-steps", sweep_theta_steps);
  sweep->add_option("--xi-min", xi_min.text, "radians or pi fraction");
  sweep->add_option("--xi-max", xi_max.text, "radians or pi fraction");
  sweep->add_option("--xi-steps", xi_steps);
  sweep->add_option("--visibility", visibility, "white-noise visibility in [0, 1]");
  add_common(sweep, sweep_common);

  // bounds
  CommonOptions bounds_common;
  AngleOption bounds_theta_min{"0"}, bounds_theta_max{"pi"};
  AngleOption alpha_min{"-pi"}, alpha_max{"pi"}, beta_min{"-pi"}, beta_max{"pi"};
  std::size_t bounds_theta_steps = 1000, alpha_steps = 200, beta_steps = 200;
  std::string bounds_parametrization = "fs";
  double refine_tolerance = wigner::kDefaultRefineTolerance;
  CLI::App* bounds = app.add_subcommand("bounds", "Eigenvalue bounds of the Wigner operator");
  bounds->add_option("--theta-min", bounds_theta_min.text, "radians or pi fraction");
  bounds->add_option("--theta-max", bounds_theta_max.text, "radians or pi fraction");
  bounds->add_option("--theta-steps", bounds_theta_steps);
  bounds->add_option("--parametrization", bounds_parametrization, "fs or general")
      ->check(CLI::IsMember({"fs", "general"}));
  bounds->add_option("--alpha-min", alpha_min.text);
  bounds->add_option("--alpha-max", alpha_max.text);
  bounds->add_option("--alpha-steps", alpha_steps);
  bounds->add_option("--beta-min", beta_min.text);
  bounds->add_option("--beta-max", beta_max.text);
  bounds->add_option("--beta-steps", beta_steps);
  bounds->add_option("--refine-tolerance", refine_tolerance, "golden-section bracket width");
  add_common(bounds, bounds_common);

  // classical
  CommonOptions classical_common;
  CLI::App* classical =
      app.add_subcommand("classical", "Enumerate the 16 deterministic local strategies");
  add_common(classical, classical_common);

  // qkd
  CommonOptions qkd_common;
  std::size_t qkd_theta_steps = wigner::kDefaultQkdThetaSteps;
  std::size_t phase_steps = wigner::kDefaultQkdPhaseSteps;
  std::string qkd_parametrization = "fs";
  CLI::App* qkd = app.add_subcommand("qkd", "Ekert-protocol suitability of Gamma/Delta states");
  qkd->add_option("--theta-steps", qkd_theta_steps, "theta grid (per angle axis when general)");
  qkd->add_option("--phase-steps", phase_steps);
  qkd->add_option("--parametrization", qkd_parametrization, "fs or general")
      ->check(CLI::IsMember({"fs", "general"}));
  add_common(qkd, qkd_common);

  // verify
  std::string verify_input;
  std::string verify_config;
  bool require_violations = false;
  CLI::App* verify =
      app.add_subcommand("verify", "Check a sweep grid against the eigenvalue envelope");
  verify->add_option("input", verify_input, "sweep CSV or JSON file")->required();
  verify->add_flag("--require-violations", require_violations,
                   "also fail unless both W < 0 and W > 1 occur");
  verify->add_option("--config", verify_config, "key=value file with option defaults");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = apply_config_file(app, std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  } catch (const wigner::Error& e) {
    std::cerr << "wigner: " << e.what() << '\n';
    return e.kind() == wigner::ErrorKind::io ? kExitIo : kExitConfig;
  }

  try {
    const unsigned threads = wigner::thread_cap_from_environment();

    if (*sweep) {
      wigner::SweepConfig cfg;
      cfg.theta_min = sweep_theta_min.value("theta-min");
      cfg.theta_max = sweep_theta_max.value("theta-max");
      cfg.theta_steps = sweep_theta_steps;
      cfg.xi_min = xi_min.value("xi-min");
      cfg.xi_max = xi_max.value("xi-max");
      cfg.xi_steps = xi_steps;
      cfg.visibility = visibility;
      cfg.output_format = wigner::parse_output_format(sweep_common.format);
      cfg.output_path = sweep_common.out;
      const wigner::SweepGrid grid = wigner::run_sweep(cfg, threads);
      write_output(cfg.output_path,
                   [&](std::ostream& os) { wigner::write_sweep(os, grid, cfg.output_format); });
    } else if (*bounds) {
      wigner::BoundsConfig cfg;
      cfg.general = bounds_parametrization == "general";
      cfg.theta_min = bounds_theta_min.value("theta-min");
      cfg.theta_max = bounds_theta_max.value("theta-max");
      cfg.theta_steps = bounds_theta_steps;
      cfg.alpha_min = alpha_min.value("alpha-min");
      cfg.alpha_max = alpha_max.value("alpha-max");
      cfg.alpha_steps = alpha_steps;
      cfg.beta_min = beta_min.value("beta-min");
      cfg.beta_max = beta_max.value("beta-max");
      cfg.beta_steps = beta_steps;
      cfg.refine_tolerance = refine_tolerance;
      cfg.output_format = wigner::parse_output_format(bounds_common.format);
      cfg.output_path = bounds_common.out;
      const wigner::BoundsResult result = wigner::run_bounds(cfg, threads);
      write_output(cfg.output_path,
                   [&](std::ostream& os) { wigner::write_bounds(os, result, cfg.output_format); });
    } else if (*classical) {
      const auto format = wigner::parse_output_format(classical_common.format);
      const wigner::ClassicalBounds result = wigner::classical_enumeration();
      write_output(classical_common.out,
                   [&](std::ostream& os) { wigner::write_classical(os, result, format); });
    } else if (*qkd) {
      wigner::QkdConfig cfg;
      cfg.general = qkd_parametrization == "general";
      cfg.theta_steps = qkd_theta_steps;
      cfg.phase_steps = phase_steps;
      cfg.output_format = wigner::parse_output_format(qkd_common.format);
      cfg.output_path = qkd_common.out;
      const auto report = wigner::run_qkd(cfg, threads);
      write_output(cfg.output_path,
                   [&](std::ostream& os) { wigner::write_qkd(os, report, cfg.output_format); });
    } else if (*verify) {
      std::ifstream in(verify_input, std::ios::binary);
      if (!in) throw IoError("cannot open '" + verify_input + "'");
      const wigner::SweepGrid grid = wigner::read_sweep(in);
      const wigner::EnvelopeReport report = wigner::verify_envelope(grid.rows);
      std::cout << "rows," << report.rows << '\n'
                << "outside_envelope," << report.outside_envelope << '\n'
                << "worst_excess," << wigner::format_number(report.worst_excess) << '\n'
                << "lower_violations," << report.lower_violations << '\n'
                << "upper_violations," << report.upper_violations << '\n';
      bool ok = report.ok();
      if (require_violations && (report.lower_violations == 0 || report.upper_violations == 0)) {
        ok = false;
      }
      std::cout << "status," << (ok ? "ok" : "failed") << '\n';
      return ok ? 0 : kExitNumerical;
    }
  } catch (const wigner::Error& e) {
    std::cerr << "wigner: " << e.what() << '\n';
    switch (e.kind()) {
      case wigner::ErrorKind::config:
      case wigner::ErrorKind::domain:
        return kExitConfig;
      case wigner::ErrorKind::io:
        return kExitIo;
      default:
        return kExitNumerical;
    }
  }
  return 0;
}

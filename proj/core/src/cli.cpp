#include "wigner/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>

#include "wigner/errors.hpp"
#include "wigner/search.hpp"
#include "wigner/states.hpp"
#include "wigner/wigner.hpp"

namespace wigner {
namespace {

void require_finite(double x, const char* field) {
  if (!std::isfinite(x)) throw ConfigError(field, "must be finite");
}

void require_axis(double lo, double hi, std::size_t steps, const char* min_field,
                  const char* max_field, const char* steps_field) {
  require_finite(lo, min_field);
  require_finite(hi, max_field);
  if (steps < 2) throw ConfigError(steps_field, "must be at least 2");
  if (!(lo < hi)) throw ConfigError(max_field, std::string("must be greater than ") + min_field);
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw ConfigError("format", "expected 'csv' or 'json', got '" + std::string(text) + "'");
}

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::csv ? "csv" : "json";
}

void validate(const SweepConfig& cfg) {
  require_axis(cfg.theta_min, cfg.theta_max, cfg.theta_steps, "theta-min", "theta-max",
               "theta-steps");
  require_axis(cfg.xi_min, cfg.xi_max, cfg.xi_steps, "xi-min", "xi-max", "xi-steps");
  if (!(cfg.visibility >= 0.0 && cfg.visibility <= 1.0)) {
    throw ConfigError("visibility", "must lie in [0, 1]");
  }
}

SweepGrid run_sweep(const SweepConfig& cfg, unsigned threads) {
  validate(cfg);
  const GridAxis theta_axis{"theta", cfg.theta_min, cfg.theta_max, cfg.theta_steps};
  const GridAxis xi_axis{"xi", cfg.xi_min, cfg.xi_max, cfg.xi_steps};

  SweepGrid grid;
  grid.theta_steps = cfg.theta_steps;
  grid.xi_steps = cfg.xi_steps;
  grid.visibility = cfg.visibility;
  grid.rows = parallel_map(
      cfg.theta_steps * cfg.xi_steps,
      [&](std::size_t i) {
        const double theta = theta_axis.at(i / cfg.xi_steps);
        const double xi = xi_axis.at(i % cfg.xi_steps);
        const DensityMatrix rho =
            white_noise_mix(density_from_pure(phi_xi_state(xi)), cfg.visibility);
        return SweepRow{theta, xi, wigner_value(WignerParametrization::filipp_svozil(theta), rho)};
      },
      threads);
  return grid;
}

EnvelopeReport verify_envelope(std::span<const SweepRow> rows, double tolerance) {
  EnvelopeReport report;
  std::map<double, std::pair<double, double>> envelope;
  for (const SweepRow& row : rows) {
    auto it = envelope.find(row.theta);
    if (it == envelope.end()) {
      const QuantumBounds qb = quantum_bounds(WignerParametrization::filipp_svozil(row.theta));
      it = envelope.emplace(row.theta, std::make_pair(qb.lambda_min, qb.lambda_max)).first;
    }
    const auto [lo, hi] = it->second;
    const double excess = std::max(lo - row.w, row.w - hi);
    ++report.rows;
    if (excess > tolerance) {
      ++report.outside_envelope;
      report.worst_excess = std::max(report.worst_excess, excess);
    }
    if (row.w < -tolerance) ++report.lower_violations;
    if (row.w > 1.0 + tolerance) ++report.upper_violations;
  }
  return report;
}

void validate(const BoundsConfig& cfg) {
  if (cfg.general) {
    require_axis(cfg.alpha_min, cfg.alpha_max, cfg.alpha_steps, "alpha-min", "alpha-max",
                 "alpha-steps");
    require_axis(cfg.beta_min, cfg.beta_max, cfg.beta_steps, "beta-min", "beta-max",
                 "beta-steps");
  } else if (cfg.theta_steps == 1) {
    require_finite(cfg.theta_min, "theta-min");
  } else {
    require_axis(cfg.theta_min, cfg.theta_max, cfg.theta_steps, "theta-min", "theta-max",
                 "theta-steps");
  }
  if (!(cfg.refine_tolerance > 0.0)) throw ConfigError("refine-tolerance", "must be positive");
}

BoundsResult run_bounds(const BoundsConfig& cfg, unsigned threads) {
  validate(cfg);
  BoundsResult result;
  if (cfg.general) {
    result.parameter_names = {"alpha", "beta"};
    const GridAxis alpha{"alpha", cfg.alpha_min, cfg.alpha_max, cfg.alpha_steps};
    const GridAxis beta{"beta", cfg.beta_min, cfg.beta_max, cfg.beta_steps};
    result.rows = parallel_map(
        cfg.alpha_steps * cfg.beta_steps,
        [&](std::size_t i) {
          const double a = alpha.at(i / cfg.beta_steps);
          const double b = beta.at(i % cfg.beta_steps);
          const QuantumBounds qb = quantum_bounds(WignerParametrization::general(a, b));
          return BoundsRow{{a, b}, qb.lambda_min, qb.lambda_max};
        },
        threads);
    result.extrema = scan_general_extrema({cfg.alpha_min, cfg.alpha_max}, cfg.alpha_steps,
                                          {cfg.beta_min, cfg.beta_max}, cfg.beta_steps,
                                          cfg.refine_tolerance, threads);
    return result;
  }

  result.parameter_names = {"theta"};
  for (const BoundSample& s :
       quantum_bound_curve(cfg.theta_min, cfg.theta_max, cfg.theta_steps, threads)) {
    result.rows.push_back({{s.theta}, s.lambda_min, s.lambda_max});
  }
  if (cfg.theta_steps >= 2) {
    result.extrema = scan_quantum_extrema(cfg.theta_min, cfg.theta_max, cfg.theta_steps,
                                          cfg.refine_tolerance, threads);
  } else {
    // A single angle has nothing to refine: the extremes are the sample.
    const BoundsRow& row = result.rows.front();
    ExtremaReport& e = result.extrema;
    e.grid = {{"theta", cfg.theta_min, cfg.theta_min, 1, AxisKind::closed}};
    e.global_min = {row.parameters, row.lambda_min};
    e.global_max = {row.parameters, row.lambda_max};
    e.argmin = {e.global_min};
    e.argmax = {e.global_max};
  }
  return result;
}

void validate(const QkdConfig& cfg) {
  if (cfg.theta_steps < 2) throw ConfigError("theta-steps", "must be at least 2");
  if (cfg.phase_steps < 2) throw ConfigError("phase-steps", "must be at least 2");
}

std::vector<QkdAssessment> run_qkd(const QkdConfig& cfg, unsigned threads) {
  validate(cfg);
  return cfg.general ? qkd_report_general(cfg.theta_steps, cfg.phase_steps, threads)
                     : qkd_report(cfg.theta_steps, cfg.phase_steps, threads);
}

unsigned thread_cap_from_environment() {
  const char* raw = std::getenv("WIGNER_THREADS");
  if (raw == nullptr) return 0;
  const std::string_view text(raw);
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw ConfigError("WIGNER_THREADS", "must be a positive integer");
  }
  return value;
}

}  // namespace wigner

#pragma once

// Configurations and runners behind the `wigner` command-line tool. Each
// runner validates its config (ConfigError names the offending field),
// computes in memory, and leaves serialization to serialize.hpp.

#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wigner/bounds.hpp"
#include "wigner/qkd.hpp"

namespace wigner {

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(std::string_view text);
std::string_view to_string(OutputFormat format);

struct SweepConfig {
  double theta_min = 0.0;
  double theta_max = std::numbers::pi;
  std::size_t theta_steps = 200;
  double xi_min = 0.0;
  double xi_max = std::numbers::pi;
  std::size_t xi_steps = 200;
  double visibility = 1.0;
  OutputFormat output_format = OutputFormat::csv;
  std::string output_path;  // empty or "-" means standard output
};

void validate(const SweepConfig& cfg);

struct SweepRow {
  double theta;
  double xi;
  double w;

  bool operator==(const SweepRow&) const = default;
};

struct SweepGrid {
  std::size_t theta_steps = 0;
  std::size_t xi_steps = 0;
  double visibility = 1.0;
  std::vector<SweepRow> rows;  // theta-major
};

/// W of the one-angle operator at theta for the noisy |phi(xi)> state, on
/// every (theta, xi) node of the inclusive grid.
SweepGrid run_sweep(const SweepConfig& cfg, unsigned threads = 0);

struct EnvelopeReport {
  std::size_t rows = 0;
  std::size_t outside_envelope = 0;
  std::size_t lower_violations = 0;  // w < 0
  std::size_t upper_violations = 0;  // w > 1
  double worst_excess = 0.0;         // largest distance outside the envelope

  bool ok() const { return outside_envelope == 0; }
};

inline constexpr double kEnvelopeTolerance = 1e-9;

/// Checks every row against [lambda_min(theta), lambda_max(theta)] and counts
/// classical violations.
EnvelopeReport verify_envelope(std::span<const SweepRow> rows,
                               double tolerance = kEnvelopeTolerance);

struct BoundsConfig {
  bool general = false;
  double theta_min = 0.0;
  double theta_max = std::numbers::pi;
  std::size_t theta_steps = 1000;
  double alpha_min = -std::numbers::pi;
  double alpha_max = std::numbers::pi;
  std::size_t alpha_steps = 200;
  double beta_min = -std::numbers::pi;
  double beta_max = std::numbers::pi;
  std::size_t beta_steps = 200;
  double refine_tolerance = kDefaultRefineTolerance;
  OutputFormat output_format = OutputFormat::csv;
  std::string output_path;
};

void validate(const BoundsConfig& cfg);

struct BoundsRow {
  std::vector<double> parameters;  // (theta) or (alpha, beta)
  double lambda_min;
  double lambda_max;
};

struct BoundsResult {
  std::vector<std::string> parameter_names;
  std::vector<BoundsRow> rows;
  ExtremaReport extrema;
};

BoundsResult run_bounds(const BoundsConfig& cfg, unsigned threads = 0);

struct QkdConfig {
  bool general = false;
  std::size_t theta_steps = kDefaultQkdThetaSteps;  // per angle axis in general mode
  std::size_t phase_steps = kDefaultQkdPhaseSteps;
  OutputFormat output_format = OutputFormat::csv;
  std::string output_path;
};

void validate(const QkdConfig& cfg);

std::vector<QkdAssessment> run_qkd(const QkdConfig& cfg, unsigned threads = 0);

/// WIGNER_THREADS if set to a positive integer, else 0 (all hardware threads).
unsigned thread_cap_from_environment();

}  // namespace wigner

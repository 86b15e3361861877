#include "wigner/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wigner/errors.hpp"

namespace wigner {
namespace {

bool is_plus(BasisSign s) { return s == BasisSign::plus; }

struct EigenExtremes {
  double lambda_min;
  double lambda_max;
};

EigenExtremes eigen_extremes(const WignerParametrization& p) {
  const EigenDecomposition eig = eigen_hermitian(wigner_operator(p));
  return {eig.eigenvalues.front(), eig.eigenvalues.back()};
}

void require_range(double lo, double hi, std::size_t steps, const char* what) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError(std::string(what) + ": range minimum must be below maximum");
  }
  if (steps < 2) throw DomainError(std::string(what) + ": need at least 2 steps per axis");
}

// Runs the eigenvalue-extreme scan over `axes`, where `make` maps a grid
// parameter vector to the operator's parametrization.
template <class Make>
ExtremaReport scan_extrema(std::vector<GridAxis> axes, Make make, double refine_tolerance,
                           unsigned threads) {
  const std::vector<EigenExtremes> grid = parallel_map(
      grid_size(axes),
      [&](std::size_t i) { return eigen_extremes(make(grid_point(axes, i))); }, threads);
  std::vector<double> mins(grid.size());
  std::vector<double> maxs(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    mins[i] = grid[i].lambda_min;
    maxs[i] = grid[i].lambda_max;
  }

  RefineOptions options;
  options.bracket_tolerance = refine_tolerance;
  options.threads = threads;
  const Objective lowest = [&](std::span<const double> x) {
    return eigen_extremes(make(std::vector<double>(x.begin(), x.end()))).lambda_min;
  };
  const Objective highest = [&](std::span<const double> x) {
    return eigen_extremes(make(std::vector<double>(x.begin(), x.end()))).lambda_max;
  };
  RefinedExtrema low = refine_grid_extrema(axes, mins, lowest, Sense::minimize, options);
  RefinedExtrema high = refine_grid_extrema(axes, maxs, highest, Sense::maximize, options);

  ExtremaReport report;
  report.grid = std::move(axes);
  report.global_min = low.best;
  report.global_max = high.best;
  report.argmin = std::move(low.all);
  report.argmax = std::move(high.all);
  return report;
}

}  // namespace

QuantumBounds quantum_bounds(const WignerParametrization& p) {
  const EigenDecomposition eig = eigen_hermitian(wigner_operator(p));
  return QuantumBounds{
      eig.eigenvalues.front(),
      eig.eigenvalues.back(),
      PureTwoQubitState::from_vector(eig.eigenvectors.front()),
      PureTwoQubitState::from_vector(eig.eigenvectors.back()),
      p,
  };
}

std::vector<LhvStrategy> all_lhv_strategies() {
  std::vector<LhvStrategy> out;
  out.reserve(16);
  const BasisSign signs[] = {BasisSign::plus, BasisSign::minus};
  for (BasisSign x1 : signs)
    for (BasisSign x2 : signs)
      for (BasisSign y2 : signs)
        for (BasisSign y3 : signs) out.push_back({x1, x2, y2, y3});
  return out;
}

int deterministic_wigner_value(const LhvStrategy& s) {
  const int term_tilt_zero = is_plus(s.x1) && is_plus(s.y2) ? 1 : 0;
  const int term_zero_tilt = is_plus(s.x2) && is_plus(s.y3) ? 1 : 0;
  const int term_zero_zero = !is_plus(s.x2) && !is_plus(s.y2) ? 1 : 0;
  const int term_tilt_tilt = is_plus(s.x1) && is_plus(s.y3) ? 1 : 0;
  return term_tilt_zero + term_zero_tilt + term_zero_zero - term_tilt_tilt;
}

ClassicalBounds classical_enumeration() {
  ClassicalBounds out{0, 0, {}};
  bool first = true;
  for (const LhvStrategy& s : all_lhv_strategies()) {
    const int w = deterministic_wigner_value(s);
    out.per_strategy.emplace(s, w);
    out.w_min = first ? w : std::min(out.w_min, w);
    out.w_max = first ? w : std::max(out.w_max, w);
    first = false;
  }
  return out;
}

double lhv_mixture_value(const std::map<LhvStrategy, double>& weights) {
  double total = 0.0;
  double value = 0.0;
  for (const auto& [strategy, weight] : weights) {
    if (!std::isfinite(weight) || weight < 0.0) {
      throw DomainError("lhv_mixture_value: weights must be finite and non-negative");
    }
    total += weight;
    value += weight * deterministic_wigner_value(strategy);
  }
  if (std::abs(total - 1.0) > kDistributionTolerance) {
    throw DomainError("lhv_mixture_value: weights sum to " + std::to_string(total) +
                      ", expected 1");
  }
  return value;
}

std::vector<BoundSample> quantum_bound_curve(double theta_min, double theta_max, std::size_t steps,
                                             unsigned threads) {
  if (steps == 0) throw DomainError("quantum_bound_curve: steps must be positive");
  const GridAxis axis{"theta", theta_min, theta_max, steps, AxisKind::closed};
  return parallel_map(
      steps,
      [&](std::size_t i) {
        const double theta = axis.at(i);
        const EigenExtremes e = eigen_extremes(WignerParametrization::filipp_svozil(theta));
        return BoundSample{theta, e.lambda_min, e.lambda_max};
      },
      threads);
}

ExtremaReport scan_quantum_extrema(double theta_min, double theta_max, std::size_t steps,
                                   double refine_tolerance, unsigned threads) {
  require_range(theta_min, theta_max, steps, "scan_quantum_extrema");
  std::vector<GridAxis> axes{{"theta", theta_min, theta_max, steps, AxisKind::closed}};
  return scan_extrema(
      std::move(axes),
      [](const std::vector<double>& x) { return WignerParametrization::filipp_svozil(x[0]); },
      refine_tolerance, threads);
}

ExtremaReport scan_general_extrema(AngleRange alpha_range, std::size_t alpha_steps,
                                   AngleRange beta_range, std::size_t beta_steps,
                                   double refine_tolerance, unsigned threads) {
  require_range(alpha_range.min, alpha_range.max, alpha_steps, "scan_general_extrema(alpha)");
  require_range(beta_range.min, beta_range.max, beta_steps, "scan_general_extrema(beta)");
  std::vector<GridAxis> axes{
      {"alpha", alpha_range.min, alpha_range.max, alpha_steps, AxisKind::closed},
      {"beta", beta_range.min, beta_range.max, beta_steps, AxisKind::closed},
  };
  return scan_extrema(
      std::move(axes),
      [](const std::vector<double>& x) { return WignerParametrization::general(x[0], x[1]); },
      refine_tolerance, threads);
}

}  // namespace wigner

#pragma once

#include <compare>
#include <map>
#include <vector>

#include "wigner/search.hpp"
#include "wigner/states.hpp"
#include "wigner/wigner.hpp"

namespace wigner {

/// Eigenvalue window of the Wigner operator for one parametrization, with
/// the eigenstates attaining it.
struct QuantumBounds {
  double lambda_min;
  double lambda_max;
  PureTwoQubitState state_min;
  PureTwoQubitState state_max;
  WignerParametrization parametrization;
};

QuantumBounds quantum_bounds(const WignerParametrization& p);

/// Deterministic local-hidden-variable assignment: x1, x2 are Alice's
/// outcomes at her tilted and zero analyzers, y2, y3 Bob's at his zero and
/// tilted analyzers.
struct LhvStrategy {
  BasisSign x1 = BasisSign::plus;
  BasisSign x2 = BasisSign::plus;
  BasisSign y2 = BasisSign::plus;
  BasisSign y3 = BasisSign::plus;

  auto operator<=>(const LhvStrategy&) const = default;
};

/// All 16 strategies in lexicographic (x1, x2, y2, y3) order, plus first.
std::vector<LhvStrategy> all_lhv_strategies();

/// W of a single deterministic strategy, in exact integer arithmetic.
int deterministic_wigner_value(const LhvStrategy& s);

struct ClassicalBounds {
  int w_min;
  int w_max;
  std::map<LhvStrategy, int> per_strategy;
};

ClassicalBounds classical_enumeration();

inline constexpr double kDistributionTolerance = 1e-12;

/// Sum of weight * W over a distribution on strategies. Missing strategies
/// have weight 0. Throws DomainError for negative weights or a total that is
/// not 1 within kDistributionTolerance.
double lhv_mixture_value(const std::map<LhvStrategy, double>& weights);

struct ExtremaReport {
  std::vector<GridAxis> grid;
  ExtremumPoint global_min;
  ExtremumPoint global_max;
  std::vector<ExtremumPoint> argmin;
  std::vector<ExtremumPoint> argmax;
};

/// One row of a bound curve.
struct BoundSample {
  double theta;
  double lambda_min;
  double lambda_max;
};

/// lambda_min/lambda_max of the one-angle operator at `steps` evenly spaced
/// angles in [theta_min, theta_max]. steps == 1 samples theta_min only.
std::vector<BoundSample> quantum_bound_curve(double theta_min, double theta_max, std::size_t steps,
                                             unsigned threads = 0);

inline constexpr double kDefaultRefineTolerance = 1e-10;

/// Grid scan of the one-angle eigenvalue extremes with golden-section
/// polishing. Requires theta_min < theta_max and steps >= 2.
ExtremaReport scan_quantum_extrema(double theta_min, double theta_max, std::size_t steps,
                                   double refine_tolerance = kDefaultRefineTolerance,
                                   unsigned threads = 0);

struct AngleRange {
  double min;
  double max;
};

/// Same as scan_quantum_extrema over the general (alpha, beta) operator.
ExtremaReport scan_general_extrema(AngleRange alpha_range, std::size_t alpha_steps,
                                   AngleRange beta_range, std::size_t beta_steps,
                                   double refine_tolerance = kDefaultRefineTolerance,
                                   unsigned threads = 0);

}  // namespace wigner

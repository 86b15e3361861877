#include "wigner/qkd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wigner/bounds.hpp"
#include "wigner/errors.hpp"

namespace wigner {
namespace {

constexpr double kPi = std::numbers::pi;

bool near(double x, double target, double tol) { return std::abs(x - target) <= tol; }

// Parametrization of a grid point: (theta, phase) or (alpha, beta, phase).
WignerParametrization parametrization_at(bool general, std::span<const double> x) {
  return general ? WignerParametrization::general(x[0], x[1])
                 : WignerParametrization::filipp_svozil(x[0]);
}

double evaluate(SettingTag tag, StateFamily family, bool general, std::span<const double> x) {
  const WignerParametrization p = parametrization_at(general, x);
  const SettingPair setting = resolve_setting(tag, p.alice_tilt(), p.bob_tilt());
  const double phase = x.back();
  return wigner_value(p, density_from_pure(family_state(family, setting, phase)));
}

QkdAssessment search(SettingTag tag, StateFamily family, bool general,
                     std::vector<GridAxis> axes, unsigned threads) {
  const Objective objective = [&](std::span<const double> x) {
    return evaluate(tag, family, general, x);
  };
  const std::vector<double> values = evaluate_grid(axes, objective, threads);

  RefineOptions options;
  options.threads = threads;
  const RefinedExtrema low = refine_grid_extrema(axes, values, objective, Sense::minimize, options);
  const RefinedExtrema high = refine_grid_extrema(axes, values, objective, Sense::maximize, options);

  QkdAssessment out;
  out.setting = tag;
  out.family = family;
  out.general = general;
  for (const auto& axis : axes) out.parameter_names.push_back(axis.name);
  out.lower = {low.best.value, low.all, low.best.value < -kViolationMargin};
  out.upper = {high.best.value, high.all, high.best.value > 1.0 + kViolationMargin};

  // Determinism is a property of the family at its anchor; check it at every
  // reported extreme.
  out.deterministic = true;
  out.marginals_random = true;
  for (const QkdExtreme* extreme : {&out.lower, &out.upper}) {
    for (const ExtremumPoint& point : extreme->locations) {
      const WignerParametrization p = parametrization_at(general, point.parameters);
      const SettingPair setting = resolve_setting(tag, p.alice_tilt(), p.bob_tilt());
      const DeterminismResult d =
          determinism_check(family_state(family, setting, point.parameters.back()), setting);
      out.deterministic = out.deterministic && d.deterministic;
      out.marginals_random = out.marginals_random && d.marginals_random;
    }
  }
  out.secure = out.deterministic && out.marginals_random &&
               (out.lower.violation || out.upper.violation);

  // Constrained states can never leave the unconstrained eigenvalue window.
  for (const QkdExtreme* extreme : {&out.lower, &out.upper}) {
    for (const ExtremumPoint& point : extreme->locations) {
      const QuantumBounds qb = quantum_bounds(parametrization_at(general, point.parameters));
      if (point.value < qb.lambda_min - 1e-9 || point.value > qb.lambda_max + 1e-9) {
        throw NumericalConsistencyError("qkd search: W outside the eigenvalue window");
      }
    }
  }
  return out;
}

void require_steps(std::size_t a, std::size_t b, const char* what) {
  if (a < 2 || b < 2) throw DomainError(std::string(what) + ": steps must be at least 2");
}

}  // namespace

std::string_view to_string(SettingTag tag) {
  switch (tag) {
    case SettingTag::minus_theta_zero:
      return "minus_theta_zero";
    case SettingTag::minus_theta_theta:
      return "minus_theta_theta";
    case SettingTag::zero_zero:
      return "zero_zero";
    case SettingTag::zero_theta:
      return "zero_theta";
  }
  return "unknown";
}

std::string_view to_string(StateFamily family) {
  return family == StateFamily::gamma ? "gamma" : "delta";
}

SettingPair resolve_setting(SettingTag tag, double alice_tilt, double bob_tilt) {
  switch (tag) {
    case SettingTag::minus_theta_zero:
      return {tag, alice_tilt, 0.0};
    case SettingTag::minus_theta_theta:
      return {tag, alice_tilt, bob_tilt};
    case SettingTag::zero_zero:
      return {tag, 0.0, 0.0};
    case SettingTag::zero_theta:
      return {tag, 0.0, bob_tilt};
  }
  throw DomainError("resolve_setting: unknown tag");
}

SettingPair resolve_setting(SettingTag tag, double theta) {
  return resolve_setting(tag, -theta, theta);
}

std::array<SettingPair, 4> settings_set(double theta) {
  std::array<SettingPair, 4> out{};
  for (std::size_t i = 0; i < kAllSettings.size(); ++i) {
    out[i] = resolve_setting(kAllSettings[i], theta);
  }
  return out;
}

PureTwoQubitState family_state(StateFamily family, const SettingPair& setting, double phase) {
  return family == StateFamily::gamma ? gamma_state(setting.angle_a, setting.angle_b, phase)
                                      : delta_state(setting.angle_a, setting.angle_b, phase);
}

DeterminismResult determinism_check(const PureTwoQubitState& state, const SettingPair& setting) {
  const DensityMatrix rho = density_from_pure(state);
  const AnalyzerSetting at = setting.analyzers();
  const BasisSign signs[] = {BasisSign::plus, BasisSign::minus};
  double joint[2][2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) joint[a][b] = joint_probability(at, signs[a], signs[b], rho);

  const double alice_plus = joint[0][0] + joint[0][1];
  const double alice_minus = joint[1][0] + joint[1][1];
  const double bob_plus = joint[0][0] + joint[1][0];
  const double bob_minus = joint[0][1] + joint[1][1];

  DeterminismResult out{true, true};
  const double alice[] = {alice_plus, alice_minus};
  for (int a = 0; a < 2; ++a) {
    if (alice[a] <= kMarginalTolerance) continue;  // outcome never happens
    const double conditional_plus = joint[a][0] / alice[a];
    if (!near(conditional_plus, 0.0, kConditionalTolerance) &&
        !near(conditional_plus, 1.0, kConditionalTolerance)) {
      out.deterministic = false;
    }
  }
  out.marginals_random = near(alice_plus, 0.5, kMarginalTolerance) &&
                         near(alice_minus, 0.5, kMarginalTolerance) &&
                         near(bob_plus, 0.5, kMarginalTolerance) &&
                         near(bob_minus, 0.5, kMarginalTolerance);
  return out;
}

QkdAssessment qkd_violation_search(SettingTag tag, StateFamily family, std::size_t theta_steps,
                                   std::size_t phase_steps, unsigned threads) {
  require_steps(theta_steps, phase_steps, "qkd_violation_search");
  return search(tag, family, false,
                {{"theta", 0.0, kPi, theta_steps, AxisKind::open},
                 {"phase", 0.0, 2.0 * kPi, phase_steps, AxisKind::periodic}},
                threads);
}

QkdAssessment qkd_violation_search_general(SettingTag tag, StateFamily family,
                                           std::size_t angle_steps, std::size_t phase_steps,
                                           unsigned threads) {
  require_steps(angle_steps, phase_steps, "qkd_violation_search_general");
  return search(tag, family, true,
                {{"alpha", -kPi, kPi, angle_steps, AxisKind::periodic},
                 {"beta", -kPi, kPi, angle_steps, AxisKind::periodic},
                 {"phase", 0.0, 2.0 * kPi, phase_steps, AxisKind::periodic}},
                threads);
}

std::vector<QkdAssessment> qkd_report(std::size_t theta_steps, std::size_t phase_steps,
                                      unsigned threads) {
  std::vector<QkdAssessment> out;
  for (SettingTag tag : kAllSettings)
    for (StateFamily family : kAllFamilies)
      out.push_back(qkd_violation_search(tag, family, theta_steps, phase_steps, threads));
  return out;
}

std::vector<QkdAssessment> qkd_report_general(std::size_t angle_steps, std::size_t phase_steps,
                                              unsigned threads) {
  std::vector<QkdAssessment> out;
  for (SettingTag tag : kAllSettings)
    for (StateFamily family : kAllFamilies)
      out.push_back(qkd_violation_search_general(tag, family, angle_steps, phase_steps, threads));
  return out;
}

QkdSummary summarize(const std::vector<QkdAssessment>& report) {
  QkdSummary out{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const auto& a : report) {
    out.best_lower = std::min(out.best_lower, a.lower.w);
    out.best_upper = std::max(out.best_upper, a.upper.w);
  }
  return out;
}

}  // namespace wigner

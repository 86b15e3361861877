#pragma once

// Ekert-protocol suitability of the Gamma/Delta maximally entangled families.
//
// A family state is anchored at one of the four analyzer pairs of the Wigner
// test. At its anchor it gives perfectly (anti)correlated outcomes with
// unbiased marginals, i.e. it can generate key there. The question is whether
// the same state still violates 0 <= W <= 1 at the remaining settings.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wigner/search.hpp"
#include "wigner/states.hpp"
#include "wigner/wigner.hpp"

namespace wigner {

/// Analyzer pairs of the Wigner test, written with the one-angle angles
/// (-theta on Alice's tilted analyzer, +theta on Bob's).
enum class SettingTag : std::uint8_t {
  minus_theta_zero,   // {-theta_A, 0_B}
  minus_theta_theta,  // {-theta_A, theta_B}
  zero_zero,          // {0_A, 0_B}
  zero_theta,         // {0_A, theta_B}
};

inline constexpr std::array<SettingTag, 4> kAllSettings = {
    SettingTag::minus_theta_zero, SettingTag::minus_theta_theta, SettingTag::zero_zero,
    SettingTag::zero_theta};

std::string_view to_string(SettingTag tag);

struct SettingPair {
  SettingTag tag;
  double angle_a;
  double angle_b;

  AnalyzerSetting analyzers() const { return {angle_a, angle_b}; }
};

/// Resolves a tag against explicit tilts (general operator).
SettingPair resolve_setting(SettingTag tag, double alice_tilt, double bob_tilt);
/// Resolves a tag for the one-angle operator at `theta`.
SettingPair resolve_setting(SettingTag tag, double theta);

std::array<SettingPair, 4> settings_set(double theta);

enum class StateFamily : std::uint8_t { gamma, delta };

inline constexpr std::array<StateFamily, 2> kAllFamilies = {StateFamily::gamma,
                                                            StateFamily::delta};

std::string_view to_string(StateFamily family);

/// Gamma or Delta state anchored at `setting` with the given relative phase.
PureTwoQubitState family_state(StateFamily family, const SettingPair& setting, double phase);

struct DeterminismResult {
  bool deterministic;
  bool marginals_random;
};

inline constexpr double kMarginalTolerance = 1e-10;
inline constexpr double kConditionalTolerance = 1e-9;

/// Outcomes at `setting` are deterministic when Bob's outcome is fixed by
/// Alice's (every conditional probability is 0 or 1), and random when both
/// single-party marginals are 1/2.
DeterminismResult determinism_check(const PureTwoQubitState& state, const SettingPair& setting);

inline constexpr double kViolationMargin = 1e-9;

struct QkdExtreme {
  double w = 0.0;
  /// Every refined location tying with `w`; parameters follow
  /// QkdAssessment::parameter_names.
  std::vector<ExtremumPoint> locations;
  bool violation = false;
};

struct QkdAssessment {
  SettingTag setting;
  StateFamily family;
  bool general = false;
  std::vector<std::string> parameter_names;
  bool deterministic = false;
  bool marginals_random = false;
  QkdExtreme lower;
  QkdExtreme upper;
  bool secure = false;
};

inline constexpr std::size_t kDefaultQkdThetaSteps = 500;
inline constexpr std::size_t kDefaultQkdPhaseSteps = 64;

/// Scans theta over (0, pi) and the family phase over [0, 2 pi), evaluating W
/// of the one-angle operator at theta for the family state anchored at
/// `tag`'s angles, and polishes the extremes.
QkdAssessment qkd_violation_search(SettingTag tag, StateFamily family, std::size_t theta_steps,
                                   std::size_t phase_steps, unsigned threads = 0);

/// Same search over the general operator: alpha, beta over [-pi, pi) and the
/// phase, with the family anchored at tag's (alpha, beta)-resolved angles.
QkdAssessment qkd_violation_search_general(SettingTag tag, StateFamily family,
                                           std::size_t angle_steps, std::size_t phase_steps,
                                           unsigned threads = 0);

/// All 4 settings x 2 families, settings in kAllSettings order, gamma first.
std::vector<QkdAssessment> qkd_report(std::size_t theta_steps, std::size_t phase_steps,
                                      unsigned threads = 0);
std::vector<QkdAssessment> qkd_report_general(std::size_t angle_steps, std::size_t phase_steps,
                                              unsigned threads = 0);

struct QkdSummary {
  double best_lower;
  double best_upper;
};

QkdSummary summarize(const std::vector<QkdAssessment>& report);

}  // namespace wigner

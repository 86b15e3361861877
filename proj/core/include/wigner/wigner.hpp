#pragma once

#include <variant>

#include "wigner/numeric.hpp"
#include "wigner/states.hpp"

namespace wigner {

/// Analyzer angles (radians) on Alice's and Bob's side.
struct AnalyzerSetting {
  double angle_a = 0.0;
  double angle_b = 0.0;
};

/// Which analyzer angles define the Wigner operator.
///
/// Alice measures at {alice_tilt, 0}, Bob at {0, bob_tilt}. The one-angle
/// form (Filipp-Svozil) fixes alice_tilt = -theta and bob_tilt = theta; the
/// general form leaves both free.
class WignerParametrization {
 public:
  struct FilippSvozil {
    double theta;
  };
  struct General {
    double alpha;
    double beta;
  };

  static WignerParametrization filipp_svozil(double theta);
  static WignerParametrization general(double alpha, double beta);

  bool is_filipp_svozil() const noexcept {
    return std::holds_alternative<FilippSvozil>(variant_);
  }
  const std::variant<FilippSvozil, General>& variant() const noexcept { return variant_; }

  double alice_tilt() const noexcept;
  double bob_tilt() const noexcept;

 private:
  explicit WignerParametrization(std::variant<FilippSvozil, General> v) : variant_(v) {}

  std::variant<FilippSvozil, General> variant_;
};

/// |s_sign(theta)><s_sign(theta)|.
HermitianOperator projector(double theta, BasisSign sign);

/// P+(a)(x)P+(0) + P+(0)(x)P+(b) + P-(0)(x)P-(0) - P+(a)(x)P+(b), where
/// a = alice_tilt and b = bob_tilt.
HermitianOperator wigner_operator(const WignerParametrization& p);

inline constexpr double kProbabilityTolerance = 1e-10;
inline constexpr double kDualPathTolerance = 1e-10;

/// Tr[P_{sign_a}(angle_a) (x) P_{sign_b}(angle_b) rho], clamped to [0, 1]
/// after checking it lies within kProbabilityTolerance of that range.
double joint_probability(const AnalyzerSetting& setting, BasisSign sign_a, BasisSign sign_b,
                         const DensityMatrix& rho);

/// The four joint probabilities entering W.
struct WignerTerms {
  double tilt_a_zero_b_plus_plus;    // p_{a,0}(+,+)
  double zero_a_tilt_b_plus_plus;    // p_{0,b}(+,+)
  double zero_a_zero_b_minus_minus;  // p_{0,0}(-,-)
  double tilt_a_tilt_b_plus_plus;    // p_{a,b}(+,+)

  double value() const noexcept {
    return tilt_a_zero_b_plus_plus + zero_a_tilt_b_plus_plus + zero_a_zero_b_minus_minus -
           tilt_a_tilt_b_plus_plus;
  }
};

WignerTerms wigner_terms(const WignerParametrization& p, const DensityMatrix& rho);

/// W from the probability combination, cross-checked against
/// Tr(wigner_operator(p) rho). Throws NumericalConsistencyError when the two
/// disagree by more than kDualPathTolerance.
double wigner_value(const WignerParametrization& p, const DensityMatrix& rho);

}  // namespace wigner

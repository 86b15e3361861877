#include "wigner/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wigner/errors.hpp"

namespace wigner {

WignerParametrization WignerParametrization::filipp_svozil(double theta) {
  if (!std::isfinite(theta)) throw DomainError("filipp_svozil: theta must be finite");
  return WignerParametrization(FilippSvozil{theta});
}

WignerParametrization WignerParametrization::general(double alpha, double beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("general: alpha and beta must be finite");
  }
  return WignerParametrization(General{alpha, beta});
}

double WignerParametrization::alice_tilt() const noexcept {
  if (const auto* fs = std::get_if<FilippSvozil>(&variant_)) return -fs->theta;
  return std::get<General>(variant_).alpha;
}

double WignerParametrization::bob_tilt() const noexcept {
  if (const auto* fs = std::get_if<FilippSvozil>(&variant_)) return fs->theta;
  return std::get<General>(variant_).beta;
}

HermitianOperator projector(double theta, BasisSign sign) {
  return HermitianOperator::outer(rotated_state(theta, sign));
}

HermitianOperator wigner_operator(const WignerParametrization& p) {
  const HermitianOperator plus_a_tilt = projector(p.alice_tilt(), BasisSign::plus);
  const HermitianOperator plus_b_tilt = projector(p.bob_tilt(), BasisSign::plus);
  const HermitianOperator plus_zero = projector(0.0, BasisSign::plus);
  const HermitianOperator minus_zero = projector(0.0, BasisSign::minus);
  return tensor_product(plus_a_tilt, plus_zero) + tensor_product(plus_zero, plus_b_tilt) +
         tensor_product(minus_zero, minus_zero) - tensor_product(plus_a_tilt, plus_b_tilt);
}

double joint_probability(const AnalyzerSetting& setting, BasisSign sign_a, BasisSign sign_b,
                         const DensityMatrix& rho) {
  const HermitianOperator joint =
      tensor_product(projector(setting.angle_a, sign_a), projector(setting.angle_b, sign_b));
  const double p = trace_product(joint, rho);
  if (p < -kProbabilityTolerance || p > 1.0 + kProbabilityTolerance) {
    throw NumericalConsistencyError("joint_probability: value " + std::to_string(p) +
                                    " outside [0, 1]");
  }
  return std::clamp(p, 0.0, 1.0);
}

WignerTerms wigner_terms(const WignerParametrization& p, const DensityMatrix& rho) {
  const double a = p.alice_tilt();
  const double b = p.bob_tilt();
  return WignerTerms{
      joint_probability({a, 0.0}, BasisSign::plus, BasisSign::plus, rho),
      joint_probability({0.0, b}, BasisSign::plus, BasisSign::plus, rho),
      joint_probability({0.0, 0.0}, BasisSign::minus, BasisSign::minus, rho),
      joint_probability({a, b}, BasisSign::plus, BasisSign::plus, rho),
  };
}

double wigner_value(const WignerParametrization& p, const DensityMatrix& rho) {
  const double from_probabilities = wigner_terms(p, rho).value();
  const double from_trace = trace_product(wigner_operator(p), rho);
  if (std::abs(from_probabilities - from_trace) > kDualPathTolerance) {
    throw NumericalConsistencyError("wigner_value: probability form " +
                                    std::to_string(from_probabilities) + " disagrees with trace form " +
                                    std::to_string(from_trace));
  }
  return from_probabilities;
}

}  // namespace wigner

#pragma once

#include <cstdint>

#include "wigner/numeric.hpp"

namespace wigner {

enum class BasisSign : std::uint8_t { plus, minus };

/// |s+(theta)> = cos(theta)|H> + sin(theta)|V>;
/// |s-(theta)> = cos(theta)|V> - sin(theta)|H>.
ComplexVector rotated_state(double theta, BasisSign sign);

/// Normalized two-qubit ket in |HH>, |HV>, |VH>, |VV> order.
class PureTwoQubitState {
 public:
  /// Throws InvalidDimensionError / DomainError unless `v` is a normalized
  /// 4-vector.
  static PureTwoQubitState from_vector(const ComplexVector& v);
  static PureTwoQubitState product(const ComplexVector& alice, const ComplexVector& bob);

  const ComplexVector& vector() const noexcept { return vector_; }
  Complex amplitude(std::size_t i) const { return vector_[i]; }

 private:
  explicit PureTwoQubitState(const ComplexVector& v) : vector_(v) {}

  ComplexVector vector_;
};

enum class BellKind : std::uint8_t { psi_minus, phi_plus };

PureTwoQubitState bell_state(BellKind kind);

/// cos(xi)|phi+> + sin(xi)|psi->.
PureTwoQubitState phi_xi_state(double xi);

/// 2^{-1/2}(|s+(alpha)>|s+(beta)> + e^{i gamma}|s-(alpha)>|s-(beta)>).
PureTwoQubitState gamma_state(double alpha, double beta, double gamma_phase);

/// 2^{-1/2}(|s+(alpha)>|s-(beta)> + e^{i delta}|s-(alpha)>|s+(beta)>).
PureTwoQubitState delta_state(double alpha, double beta, double delta_phase);

inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-10;

/// Positive semidefinite, unit-trace 4x4 operator.
class DensityMatrix {
 public:
  /// Validates unit trace and positivity (via eigen_hermitian).
  static DensityMatrix from_operator(const HermitianOperator& op);
  static DensityMatrix maximally_mixed();

  const HermitianOperator& op() const noexcept { return op_; }

 private:
  explicit DensityMatrix(const HermitianOperator& op) : op_(op) {}

  friend DensityMatrix density_from_pure(const PureTwoQubitState& s);
  friend DensityMatrix white_noise_mix(const DensityMatrix& rho, double visibility);

  HermitianOperator op_;
};

DensityMatrix density_from_pure(const PureTwoQubitState& s);

/// v * rho + (1 - v) * I/4. Throws DomainError unless 0 <= v <= 1.
DensityMatrix white_noise_mix(const DensityMatrix& rho, double visibility);

/// Tr(a rho).
double trace_product(const HermitianOperator& a, const DensityMatrix& rho);

/// Reduced single-qubit states (partial trace over B, resp. A).
HermitianOperator reduced_density_a(const DensityMatrix& rho);
HermitianOperator reduced_density_b(const DensityMatrix& rho);

}  // namespace wigner

#include "wigner/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wigner/errors.hpp"

namespace wigner {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": angle must be finite");
}

// Both QKD families share this shape:
// 2^{-1/2}(|a1>|b1> + e^{i phase}|a2>|b2>).
PureTwoQubitState entangled_pair(const ComplexVector& a1, const ComplexVector& b1,
                                 const ComplexVector& a2, const ComplexVector& b2,
                                 double phase) {
  const double h = kInvSqrt2;
  ComplexVector v = h * kron(a1, b1) + (h * std::polar(1.0, phase)) * kron(a2, b2);
  return PureTwoQubitState::from_vector(v);
}

}  // namespace

ComplexVector rotated_state(double theta, BasisSign sign) {
  require_finite(theta, "rotated_state");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  if (sign == BasisSign::plus) return ComplexVector{c, s};
  return ComplexVector{-s, c};
}

PureTwoQubitState PureTwoQubitState::from_vector(const ComplexVector& v) {
  if (v.dim() != 4) {
    throw InvalidDimensionError("PureTwoQubitState: expected dimension 4, got " +
                                std::to_string(v.dim()));
  }
  if (!v.is_normalized()) {
    throw DomainError("PureTwoQubitState: vector is not normalized (norm " +
                      std::to_string(v.norm()) + ")");
  }
  return PureTwoQubitState(v);
}

PureTwoQubitState PureTwoQubitState::product(const ComplexVector& alice, const ComplexVector& bob) {
  return from_vector(kron(alice, bob));
}

PureTwoQubitState bell_state(BellKind kind) {
  const double h = kInvSqrt2;
  switch (kind) {
    case BellKind::psi_minus:
      return PureTwoQubitState::from_vector(ComplexVector{0.0, h, -h, 0.0});
    case BellKind::phi_plus:
      return PureTwoQubitState::from_vector(ComplexVector{h, 0.0, 0.0, h});
  }
  throw DomainError("bell_state: unknown kind");
}

PureTwoQubitState phi_xi_state(double xi) {
  require_finite(xi, "phi_xi_state");
  const ComplexVector v = std::cos(xi) * bell_state(BellKind::phi_plus).vector() +
                          std::sin(xi) * bell_state(BellKind::psi_minus).vector();
  return PureTwoQubitState::from_vector(v);
}

PureTwoQubitState gamma_state(double alpha, double beta, double gamma_phase) {
  require_finite(alpha, "gamma_state");
  require_finite(beta, "gamma_state");
  require_finite(gamma_phase, "gamma_state");
  return entangled_pair(rotated_state(alpha, BasisSign::plus), rotated_state(beta, BasisSign::plus),
                        rotated_state(alpha, BasisSign::minus),
                        rotated_state(beta, BasisSign::minus), gamma_phase);
}

PureTwoQubitState delta_state(double alpha, double beta, double delta_phase) {
  require_finite(alpha, "delta_state");
  require_finite(beta, "delta_state");
  require_finite(delta_phase, "delta_state");
  return entangled_pair(rotated_state(alpha, BasisSign::plus), rotated_state(beta, BasisSign::minus),
                        rotated_state(alpha, BasisSign::minus),
                        rotated_state(beta, BasisSign::plus), delta_phase);
}

DensityMatrix DensityMatrix::from_operator(const HermitianOperator& op) {
  if (op.dim() != 4) {
    throw InvalidDimensionError("DensityMatrix: expected dimension 4, got " +
                                std::to_string(op.dim()));
  }
  if (std::abs(op.trace() - 1.0) > kTraceTolerance) {
    throw DomainError("DensityMatrix: trace is " + std::to_string(op.trace()) + ", expected 1");
  }
  const EigenDecomposition eig = eigen_hermitian(op);
  if (eig.eigenvalues.front() < -kPositivityTolerance) {
    throw DomainError("DensityMatrix: negative eigenvalue " +
                      std::to_string(eig.eigenvalues.front()));
  }
  return DensityMatrix(op);
}

DensityMatrix DensityMatrix::maximally_mixed() {
  return DensityMatrix(0.25 * HermitianOperator::identity(4));
}

DensityMatrix density_from_pure(const PureTwoQubitState& s) {
  return DensityMatrix(HermitianOperator::outer(s.vector()));
}

DensityMatrix white_noise_mix(const DensityMatrix& rho, double visibility) {
  if (!(visibility >= 0.0 && visibility <= 1.0)) {
    throw DomainError("white_noise_mix: visibility must lie in [0, 1], got " +
                      std::to_string(visibility));
  }
  return DensityMatrix(visibility * rho.op() +
                       (0.25 * (1.0 - visibility)) * HermitianOperator::identity(4));
}

double trace_product(const HermitianOperator& a, const DensityMatrix& rho) {
  return trace_of_product(a, rho.op());
}

HermitianOperator reduced_density_a(const DensityMatrix& rho) {
  const HermitianOperator& m = rho.op();
  std::array<Complex, 4> out{};
  for (std::size_t ar = 0; ar < 2; ++ar)
    for (std::size_t ac = 0; ac < 2; ++ac)
      for (std::size_t b = 0; b < 2; ++b) out[ar * 2 + ac] += m(2 * ar + b, 2 * ac + b);
  return HermitianOperator::from_entries(2, out);
}

HermitianOperator reduced_density_b(const DensityMatrix& rho) {
  const HermitianOperator& m = rho.op();
  std::array<Complex, 4> out{};
  for (std::size_t br = 0; br < 2; ++br)
    for (std::size_t bc = 0; bc < 2; ++bc)
      for (std::size_t a = 0; a < 2; ++a) out[br * 2 + bc] += m(2 * a + br, 2 * a + bc);
  return HermitianOperator::from_entries(2, out);
}

}  // namespace wigner

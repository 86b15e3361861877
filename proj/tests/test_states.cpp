#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wigner/errors.hpp"
#include "wigner/states.hpp"
#include "wigner/wigner.hpp"

using namespace wigner;
using std::numbers::pi;

namespace {

const double kH = 1.0 / std::sqrt(2.0);

void check_vector(const ComplexVector& v, std::initializer_list<Complex> expected, double tol = 1e-12) {
  REQUIRE(v.dim() == expected.size());
  std::size_t i = 0;
  for (const Complex& e : expected) {
    CHECK(std::abs(v[i] - e) < tol);
    ++i;
  }
}

double density_distance(const PureTwoQubitState& a, const PureTwoQubitState& b) {
  return max_abs_difference(density_from_pure(a).op(), density_from_pure(b).op());
}

// 2x2 real rotation by t acting on (H, V).
ComplexVector rotate(const ComplexVector& v, double t) {
  const double c = std::cos(t), s = std::sin(t);
  return ComplexVector{c * v[0] - s * v[1], s * v[0] + c * v[1]};
}

}  // namespace

TEST_CASE("rotated_state examples") {
  check_vector(rotated_state(0.0, BasisSign::plus), {1.0, 0.0});
  check_vector(rotated_state(0.0, BasisSign::minus), {0.0, 1.0});
  check_vector(rotated_state(pi / 2, BasisSign::plus), {0.0, 1.0});
  CHECK_THROWS_AS(rotated_state(std::nan(""), BasisSign::plus), DomainError);
}

TEST_CASE("rotated bases are orthonormal on a dense grid") {
  for (int i = 0; i <= 2000; ++i) {
    const double t = -2.0 * pi + 4.0 * pi * i / 2000.0;
    const ComplexVector p = rotated_state(t, BasisSign::plus);
    const ComplexVector m = rotated_state(t, BasisSign::minus);
    CHECK(std::abs(inner_product(p, m)) < 1e-12);
    CHECK(p.is_normalized());
    CHECK(m.is_normalized());
  }
}

TEST_CASE("Bell states") {
  check_vector(bell_state(BellKind::psi_minus).vector(), {0.0, kH, -kH, 0.0});
  check_vector(bell_state(BellKind::phi_plus).vector(), {kH, 0.0, 0.0, kH});
  CHECK(std::abs(inner_product(bell_state(BellKind::psi_minus).vector(),
                               bell_state(BellKind::phi_plus).vector())) < 1e-15);
}

TEST_CASE("phi_xi_state examples") {
  check_vector(phi_xi_state(0.0).vector(), {kH, 0.0, 0.0, kH});
  CHECK(density_distance(phi_xi_state(pi / 2), bell_state(BellKind::psi_minus)) < 1e-12);
  const auto rho = density_from_pure(phi_xi_state(pi / 8));
  CHECK(trace_product(wigner_operator(WignerParametrization::filipp_svozil(pi / 4)), rho) ==
        doctest::Approx(0.5 + std::sqrt(2.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("phi_xi_state: xi and xi + pi give the same density matrix") {
  for (int i = 0; i <= 500; ++i) {
    const double xi = -pi + 2.0 * pi * i / 500.0;
    CHECK(density_distance(phi_xi_state(xi), phi_xi_state(xi + pi)) < 1e-12);
  }
}

// cos xi |phi+> + sin xi |psi-> = 2^{-1/2}(|H>|s+(xi)> + |V>|s-(xi)>). The relative sign is
// fixed by s-(t) = cos t|V> - sin t|H>; with a minus the xi = 0 case would be phi-, not phi+.
TEST_CASE("phi_xi_state agrees with the product-basis form") {
  const ComplexVector h{1.0, 0.0};
  const ComplexVector v{0.0, 1.0};
  for (int i = 0; i <= 1000; ++i) {
    const double xi = 2.0 * pi * i / 1000.0;
    const ComplexVector other = kH * kron(h, rotated_state(xi, BasisSign::plus)) +
                                kH * kron(v, rotated_state(xi, BasisSign::minus));
    CHECK(max_abs_difference(phi_xi_state(xi).vector(), other) < 1e-12);
  }
}

TEST_CASE("gamma_state examples") {
  check_vector(gamma_state(0.0, 0.0, 0.0).vector(), {kH, 0.0, 0.0, kH});
  check_vector(gamma_state(0.0, 0.0, pi).vector(), {kH, 0.0, 0.0, -kH});

  // Local rotation R(t) x R(t) applied to phi+ directly.
  const double t = pi / 4;
  const ComplexVector h{1.0, 0.0};
  const ComplexVector v{0.0, 1.0};
  const ComplexVector rotated = kH * kron(rotate(h, t), rotate(h, t)) + kH * kron(rotate(v, t), rotate(v, t));
  CHECK(max_abs_difference(gamma_state(t, t, 0.0).vector(), rotated) < 1e-12);
}

TEST_CASE("delta_state examples") {
  CHECK(density_distance(delta_state(0.0, 0.0, pi), bell_state(BellKind::psi_minus)) < 1e-12);
  check_vector(delta_state(0.0, 0.0, 0.0).vector(), {0.0, kH, kH, 0.0});
  const auto rho = density_from_pure(delta_state(-pi / 3, pi / 3, pi));
  CHECK(wigner_value(WignerParametrization::filipp_svozil(pi / 3), rho) ==
        doctest::Approx(1.125).epsilon(1e-12));
}

TEST_CASE("QKD families are normalized and maximally entangled") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-2.0 * pi, 2.0 * pi);
  const HermitianOperator half = 0.5 * HermitianOperator::identity(2);
  for (int i = 0; i < 1000; ++i) {
    const double a = angle(rng), b = angle(rng), phase = angle(rng);
    for (const auto& s : {gamma_state(a, b, phase), delta_state(a, b, phase)}) {
      CHECK(s.vector().is_normalized());
      const DensityMatrix rho = density_from_pure(s);
      CHECK(max_abs_difference(reduced_density_a(rho), half) < 1e-10);
      CHECK(max_abs_difference(reduced_density_b(rho), half) < 1e-10);
    }
  }
}

TEST_CASE("PureTwoQubitState validation") {
  CHECK_THROWS_AS(PureTwoQubitState::from_vector(ComplexVector{1.0, 0.0}), InvalidDimensionError);
  CHECK_THROWS_AS(PureTwoQubitState::from_vector(ComplexVector{1.0, 1.0, 0.0, 0.0}), DomainError);
  CHECK_NOTHROW(PureTwoQubitState::from_vector(ComplexVector{0.0, 0.0, 0.0, 1.0}));
  const auto s = PureTwoQubitState::product(ComplexVector{1.0, 0.0}, ComplexVector{0.0, 1.0});
  check_vector(s.vector(), {0.0, 1.0, 0.0, 0.0});
}

TEST_CASE("density_from_pure examples") {
  const auto hh = density_from_pure(PureTwoQubitState::from_vector(ComplexVector{1.0, 0.0, 0.0, 0.0}));
  CHECK(max_abs_difference(hh.op(), HermitianOperator::diagonal({1, 0, 0, 0})) == 0.0);

  const HermitianOperator& s = density_from_pure(bell_state(BellKind::psi_minus)).op();
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      double expected = 0.0;
      if ((r == 1 || r == 2) && (c == 1 || c == 2)) expected = r == c ? 0.5 : -0.5;
      CHECK(std::abs(s(r, c) - expected) < 1e-15);
    }
  }

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexVector v{Complex(n(rng), n(rng)), Complex(n(rng), n(rng)), Complex(n(rng), n(rng)),
                    Complex(n(rng), n(rng))};
    const auto rho = density_from_pure(PureTwoQubitState::from_vector(v.normalized()));
    const auto eig = eigen_hermitian(rho.op());
    CHECK(eig.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[2] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[3] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("DensityMatrix validation") {
  CHECK_THROWS_AS(DensityMatrix::from_operator(0.5 * HermitianOperator::identity(2)), InvalidDimensionError);
  CHECK_THROWS_AS(DensityMatrix::from_operator(HermitianOperator::identity(4)), DomainError);
  CHECK_THROWS_AS(DensityMatrix::from_operator(HermitianOperator::diagonal({1.5, -0.5, 0, 0})),
                  DomainError);
  CHECK_NOTHROW(DensityMatrix::from_operator(0.25 * HermitianOperator::identity(4)));
}

TEST_CASE("white_noise_mix") {
  const DensityMatrix singlet = density_from_pure(bell_state(BellKind::psi_minus));
  CHECK(max_abs_difference(white_noise_mix(singlet, 1.0).op(), singlet.op()) < 1e-15);
  CHECK(max_abs_difference(white_noise_mix(singlet, 0.0).op(), DensityMatrix::maximally_mixed().op()) < 1e-15);
  CHECK_THROWS_AS(white_noise_mix(singlet, -0.01), DomainError);
  CHECK_THROWS_AS(white_noise_mix(singlet, 1.01), DomainError);
  CHECK_THROWS_AS(white_noise_mix(singlet, std::nan("")), DomainError);

  const auto w = WignerParametrization::filipp_svozil(pi / 6);
  for (int i = 0; i <= 20; ++i) {
    const double v = i / 20.0;
    CHECK(wigner_value(w, white_noise_mix(singlet, v)) ==
          doctest::Approx(v * -0.125 + (1.0 - v) * 0.5).epsilon(1e-12));
  }
}

TEST_CASE("white_noise_mix preserves trace and positivity") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const auto rho = DensityMatrix::from_operator(oracle::random_density_operator(rng));
    const auto mixed = white_noise_mix(rho, unit(rng));
    CHECK(mixed.op().trace() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eigen_hermitian(mixed.op()).eigenvalues.front() >= -kPositivityTolerance);
    CHECK_NOTHROW(DensityMatrix::from_operator(mixed.op()));
  }
}

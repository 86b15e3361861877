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

DensityMatrix singlet() { return density_from_pure(bell_state(BellKind::psi_minus)); }

HermitianOperator square(const HermitianOperator& p) {
  std::array<Complex, 4> m{};
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t k = 0; k < 2; ++k) m[r * 2 + c] += p(r, k) * p(k, c);
  return HermitianOperator::from_entries(2, m);
}

}  // namespace

TEST_CASE("projector examples") {
  CHECK(max_abs_difference(projector(0.0, BasisSign::plus), HermitianOperator::diagonal({1, 0})) < 1e-15);
  CHECK(max_abs_difference(projector(0.0, BasisSign::minus), HermitianOperator::diagonal({0, 1})) < 1e-15);
  const HermitianOperator p = projector(pi / 4, BasisSign::plus);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(std::abs(p(r, c) - 0.5) < 1e-15);
}

TEST_CASE("projectors are idempotent, unit trace and complete") {
  for (int i = 0; i <= 2000; ++i) {
    const double t = -pi + 2.0 * pi * i / 2000.0;
    const HermitianOperator p = projector(t, BasisSign::plus);
    const HermitianOperator m = projector(t, BasisSign::minus);
    CHECK(max_abs_difference(square(p), p) < 1e-12);
    CHECK(max_abs_difference(square(m), m) < 1e-12);
    CHECK(std::abs(p.trace() - 1.0) < 1e-12);
    CHECK(max_abs_difference(p + m, HermitianOperator::identity(2)) < 1e-12);
  }
}

TEST_CASE("parametrization accessors") {
  const auto fs = WignerParametrization::filipp_svozil(0.3);
  CHECK(fs.is_filipp_svozil());
  CHECK(fs.alice_tilt() == -0.3);
  CHECK(fs.bob_tilt() == 0.3);
  const auto g = WignerParametrization::general(0.1, 0.7);
  CHECK_FALSE(g.is_filipp_svozil());
  CHECK(g.alice_tilt() == 0.1);
  CHECK(g.bob_tilt() == 0.7);
  CHECK_THROWS_AS(WignerParametrization::filipp_svozil(INFINITY), DomainError);
  CHECK_THROWS_AS(WignerParametrization::general(0.0, std::nan("")), DomainError);
}

TEST_CASE("wigner_operator examples") {
  CHECK(max_abs_difference(wigner_operator(WignerParametrization::filipp_svozil(0.0)),
                           HermitianOperator::diagonal({1, 0, 0, 1})) < 1e-15);
  const auto eig = eigen_hermitian(wigner_operator(WignerParametrization::filipp_svozil(pi / 4)));
  CHECK(eig.eigenvalues.front() == doctest::Approx((1.0 - std::sqrt(2.0)) / 2.0).epsilon(1e-12));
  CHECK(eig.eigenvalues.back() == doctest::Approx((1.0 + std::sqrt(2.0)) / 2.0).epsilon(1e-12));
}

TEST_CASE("one-angle form equals the general form at (-theta, theta)") {
  for (int i = 0; i <= 1000; ++i) {
    const double t = -pi + 2.0 * pi * i / 1000.0;
    CHECK(max_abs_difference(wigner_operator(WignerParametrization::filipp_svozil(t)),
                             wigner_operator(WignerParametrization::general(-t, t))) == 0.0);
  }
}

TEST_CASE("wigner_operator has trace 2") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-2.0 * pi, 2.0 * pi);
  for (int i = 0; i < 1000; ++i) {
    CHECK(std::abs(wigner_operator(WignerParametrization::general(angle(rng), angle(rng))).trace() - 2.0) < 1e-12);
    CHECK(std::abs(wigner_operator(WignerParametrization::filipp_svozil(angle(rng))).trace() - 2.0) < 1e-12);
  }
}

TEST_CASE("joint_probability examples") {
  CHECK(joint_probability({0.0, 0.0}, BasisSign::plus, BasisSign::plus, singlet()) == 0.0);
  const auto hh = density_from_pure(PureTwoQubitState::from_vector(ComplexVector{1.0, 0.0, 0.0, 0.0}));
  CHECK(joint_probability({0.0, 0.0}, BasisSign::plus, BasisSign::plus, hh) == 1.0);
  CHECK(joint_probability({0.0, pi / 6}, BasisSign::plus, BasisSign::plus, singlet()) ==
        doctest::Approx(0.125).epsilon(1e-12));
}

TEST_CASE("singlet joint probabilities match the rotation-invariant closed form") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (int i = 0; i < 1000; ++i) {
    const double a = angle(rng), b = angle(rng);
    CHECK(std::abs(joint_probability({a, b}, BasisSign::plus, BasisSign::plus, singlet()) -
                   oracle::singlet_plus_plus(a, b)) < 1e-12);
  }
}

TEST_CASE("joint probabilities over the four outcomes sum to one") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (int i = 0; i < 300; ++i) {
    const auto rho = DensityMatrix::from_operator(oracle::random_density_operator(rng));
    const AnalyzerSetting s{angle(rng), angle(rng)};
    double total = 0.0;
    for (BasisSign sa : {BasisSign::plus, BasisSign::minus})
      for (BasisSign sb : {BasisSign::plus, BasisSign::minus}) {
        const double p = joint_probability(s, sa, sb, rho);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        total += p;
      }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("wigner_value examples") {
  CHECK(std::abs(wigner_value(WignerParametrization::filipp_svozil(pi / 6), singlet()) + 0.125) < 1e-10);
  CHECK(std::abs(wigner_value(WignerParametrization::filipp_svozil(pi / 4),
                              density_from_pure(phi_xi_state(pi / 8))) - 1.20711) < 1e-4);
}

TEST_CASE("wigner_terms combine to the returned value") {
  const auto p = WignerParametrization::filipp_svozil(pi / 6);
  const WignerTerms t = wigner_terms(p, singlet());
  CHECK(t.tilt_a_zero_b_plus_plus == doctest::Approx(0.125));
  CHECK(t.zero_a_tilt_b_plus_plus == doctest::Approx(0.125));
  CHECK(t.zero_a_zero_b_minus_minus == doctest::Approx(0.0));
  CHECK(t.tilt_a_tilt_b_plus_plus == doctest::Approx(0.375));
  CHECK(t.value() == wigner_value(p, singlet()));
}

TEST_CASE("singlet W follows the closed-form curve") {
  for (int i = 0; i < 1000; ++i) {
    const double t = pi * i / 999.0;
    CHECK(std::abs(wigner_value(WignerParametrization::filipp_svozil(t), singlet()) -
                   oracle::singlet_wigner(t)) < 1e-10);
  }
}

TEST_CASE("probability form equals trace form for random states") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (int i = 0; i < 1000; ++i) {
    const auto rho = DensityMatrix::from_operator(oracle::random_density_operator(rng));
    const auto p = i % 2 == 0 ? WignerParametrization::filipp_svozil(angle(rng))
                              : WignerParametrization::general(angle(rng), angle(rng));
    CHECK(std::abs(wigner_terms(p, rho).value() - trace_product(wigner_operator(p), rho)) < 1e-10);
  }
}

TEST_CASE("product states satisfy the classical bounds") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> angle(0.0, pi);
  for (int i = 0; i < 1000; ++i) {
    const auto rho = density_from_pure(PureTwoQubitState::product(oracle::random_qubit(rng), oracle::random_qubit(rng)));
    const double w = wigner_value(WignerParametrization::filipp_svozil(angle(rng)), rho);
    CHECK(w >= -1e-9);
    CHECK(w <= 1.0 + 1e-9);
  }
}

TEST_CASE("W stays within the operator's eigenvalue window") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (int i = 0; i < 1000; ++i) {
    const auto rho = DensityMatrix::from_operator(oracle::random_density_operator(rng));
    const auto p = WignerParametrization::general(angle(rng), angle(rng));
    const auto eig = eigen_hermitian(wigner_operator(p));
    const double w = wigner_value(p, rho);
    CHECK(w >= eig.eigenvalues.front() - 1e-9);
    CHECK(w <= eig.eigenvalues.back() + 1e-9);
  }
}

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wigner/errors.hpp"
#include "wigner/numeric.hpp"
#include "wigner/states.hpp"
#include "wigner/wigner.hpp"

using namespace wigner;

namespace {

double reconstruction_error(const HermitianOperator& a, const EigenDecomposition& eig) {
  HermitianOperator sum = HermitianOperator::zero(a.dim());
  for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
    sum += eig.eigenvalues[i] * HermitianOperator::outer(eig.eigenvectors[i]);
  }
  return max_abs_difference(a, sum);
}

double orthonormality_error(const EigenDecomposition& eig) {
  double worst = 0.0;
  for (std::size_t i = 0; i < eig.eigenvectors.size(); ++i) {
    for (std::size_t j = 0; j < eig.eigenvectors.size(); ++j) {
      const Complex ip = inner_product(eig.eigenvectors[i], eig.eigenvectors[j]);
      worst = std::max(worst, std::abs(ip - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double eigen_equation_error(const HermitianOperator& a, const EigenDecomposition& eig) {
  double worst = 0.0;
  for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
    const ComplexVector av = a.apply(eig.eigenvectors[i]);
    worst = std::max(worst, max_abs_difference(av, eig.eigenvalues[i] * eig.eigenvectors[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("vectors reject dimensions other than 2 and 4") {
  CHECK_THROWS_AS(ComplexVector({1.0, 0.0, 0.0}), InvalidDimensionError);
  CHECK_THROWS_AS(ComplexVector::zeros(1), InvalidDimensionError);
  CHECK_THROWS_AS(ComplexVector({std::nan(""), 0.0}), DomainError);
  CHECK(ComplexVector({0.6, Complex(0.0, 0.8)}).is_normalized());
}

TEST_CASE("operators validate Hermiticity") {
  const std::array<Complex, 4> good{1.0, Complex(0.0, 1.0), Complex(0.0, -1.0), 2.0};
  CHECK_NOTHROW(HermitianOperator::from_entries(2, good));
  const std::array<Complex, 4> skew{1.0, Complex(0.0, 1.0), Complex(0.0, 1.0), 2.0};
  CHECK_THROWS_AS(HermitianOperator::from_entries(2, skew), DomainError);
  const std::array<Complex, 4> complex_diag{Complex(1.0, 0.5), 0.0, 0.0, 1.0};
  CHECK_THROWS_AS(HermitianOperator::from_entries(2, complex_diag), DomainError);
  CHECK_THROWS_AS(HermitianOperator::from_entries(4, good), InvalidDimensionError);
}

TEST_CASE("tensor_product") {
  SUBCASE("identity") {
    const HermitianOperator id4 =
        tensor_product(HermitianOperator::identity(2), HermitianOperator::identity(2));
    CHECK(max_abs_difference(id4, HermitianOperator::identity(4)) == 0.0);
  }
  SUBCASE("projector on |HH>") {
    const HermitianOperator hh =
        tensor_product(HermitianOperator::diagonal({1, 0}), HermitianOperator::diagonal({1, 0}));
    CHECK(max_abs_difference(hh, HermitianOperator::diagonal({1, 0, 0, 0})) == 0.0);
  }
  SUBCASE("P+(pi/4) x P+(pi/4) has all entries 1/4") {
    // cos(pi/4) = sin(pi/4) = 1/sqrt2, so every amplitude of |s+>|s+> is 1/2.
    const double q = std::numbers::pi / 4;
    const HermitianOperator pp =
        tensor_product(projector(q, BasisSign::plus), projector(q, BasisSign::plus));
    for (Complex z : pp.entries()) {
      CHECK(z.real() == doctest::Approx(0.25).epsilon(1e-14));
      CHECK(std::abs(z.imag()) < 1e-15);
    }
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(tensor_product(HermitianOperator::identity(4), HermitianOperator::identity(2)),
                    InvalidDimensionError);
  }
  SUBCASE("A index is major") {
    // diag(1,0) (x) diag(0,1) projects on |HV>, index 1.
    const HermitianOperator hv =
        tensor_product(HermitianOperator::diagonal({1, 0}), HermitianOperator::diagonal({0, 1}));
    CHECK(hv(1, 1).real() == 1.0);
    CHECK(hv.trace() == 1.0);
  }
}

TEST_CASE("tensor_product property: Hermitian and trace multiplicative") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const HermitianOperator a = oracle::random_hermitian(rng, 2);
    const HermitianOperator b = oracle::random_hermitian(rng, 2);
    const HermitianOperator ab = tensor_product(a, b);
    CHECK(std::abs(ab.trace() - a.trace() * b.trace()) < 1e-12);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) CHECK(std::abs(ab(r, c) - std::conj(ab(c, r))) < 1e-12);
  }
}

TEST_CASE("trace_product") {
  std::mt19937_64 rng(7);
  const DensityMatrix rho = DensityMatrix::from_operator(oracle::random_density_operator(rng));
  CHECK(trace_product(HermitianOperator::identity(4), rho) == doctest::Approx(1.0).epsilon(1e-13));

  SUBCASE("singlet at pi/6") {
    const double w = trace_product(wigner_operator(WignerParametrization::filipp_svozil(
                                       std::numbers::pi / 6)),
                                   density_from_pure(bell_state(BellKind::psi_minus)));
    CHECK(std::abs(w - (-0.125)) < 1e-12);
  }
  SUBCASE("maximally mixed state gives 1/2 for every theta") {
    // Tr W = 1 + 1 + 1 - 1 = 2, so Tr(W I/4) = 1/2.
    for (double theta = -3.0; theta <= 3.0; theta += 0.37) {
      const double w = trace_product(wigner_operator(WignerParametrization::filipp_svozil(theta)),
                                     DensityMatrix::maximally_mixed());
      CHECK(std::abs(w - 0.5) < 1e-13);
    }
  }
}

TEST_CASE("trace_product is linear in the state") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const HermitianOperator a = oracle::random_hermitian(rng, 4);
    const HermitianOperator r1 = oracle::random_density_operator(rng);
    const HermitianOperator r2 = oracle::random_density_operator(rng);
    const double p = unit(rng);
    const DensityMatrix mix = DensityMatrix::from_operator(p * r1 + (1.0 - p) * r2);
    const double lhs = trace_product(a, mix);
    const double rhs = p * trace_product(a, DensityMatrix::from_operator(r1)) +
                       (1.0 - p) * trace_product(a, DensityMatrix::from_operator(r2));
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("eigen_hermitian examples") {
  SUBCASE("identity") {
    const EigenDecomposition eig = eigen_hermitian(HermitianOperator::identity(4));
    for (double l : eig.eigenvalues) CHECK(l == 1.0);
    CHECK(orthonormality_error(eig) < 1e-12);
  }
  SUBCASE("diagonal input comes back sorted") {
    const EigenDecomposition eig = eigen_hermitian(HermitianOperator::diagonal({4, 2, 3, 1}));
    CHECK(eig.eigenvalues == std::vector<double>{1, 2, 3, 4});
    CHECK(std::abs(eig.eigenvectors[0][3] - 1.0) < 1e-15);
  }
  SUBCASE("Wigner operator at pi/4 has extremes (1 -+ sqrt2)/2") {
    const EigenDecomposition eig =
        eigen_hermitian(wigner_operator(WignerParametrization::filipp_svozil(std::numbers::pi / 4)));
    CHECK(std::abs(eig.eigenvalues.front() - (1.0 - std::sqrt(2.0)) / 2.0) < 1e-12);
    CHECK(std::abs(eig.eigenvalues.back() - (1.0 + std::sqrt(2.0)) / 2.0) < 1e-12);
    CHECK(eig.eigenvalues.front() == doctest::Approx(-0.20711).epsilon(1e-4));
  }
  SUBCASE("degenerate spectrum stays orthonormal") {
    // W(0) = diag(1,0,0,1): eigenvalues {0,0,1,1}.
    const EigenDecomposition eig =
        eigen_hermitian(wigner_operator(WignerParametrization::filipp_svozil(0.0)));
    CHECK(eig.eigenvalues[0] == doctest::Approx(0.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(0.0));
    CHECK(eig.eigenvalues[2] == doctest::Approx(1.0));
    CHECK(eig.eigenvalues[3] == doctest::Approx(1.0));
    CHECK(orthonormality_error(eig) < 1e-9);
  }
}

TEST_CASE("eigen_hermitian matches an independent power-iteration oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const HermitianOperator a = oracle::random_hermitian(rng, 4);
    const EigenDecomposition eig = eigen_hermitian(a);
    const double shift = a.frobenius_norm() + 1.0;
    CHECK(std::abs(eig.eigenvalues.back() - oracle::power_iteration_max(a, shift)) < 1e-8);
    CHECK(std::abs(eig.eigenvalues.front() - oracle::power_iteration_min(a, shift)) < 1e-8);
  }
}

TEST_CASE("eigen_hermitian invariants on seeded random matrices") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t dim = trial % 5 == 0 ? 2 : 4;
    const HermitianOperator a = oracle::random_hermitian(rng, dim);
    const EigenDecomposition eig = eigen_hermitian(a);
    REQUIRE(eig.eigenvalues.size() == dim);
    CHECK(std::is_sorted(eig.eigenvalues.begin(), eig.eigenvalues.end()));
    CHECK(reconstruction_error(a, eig) < 1e-9);
    CHECK(orthonormality_error(eig) < 1e-9);
    CHECK(eigen_equation_error(a, eig) < 1e-9);
    for (const ComplexVector& v : eig.eigenvectors) {
      // Phase convention: first largest-modulus component is real, >= 0.
      double largest = 0.0;
      for (std::size_t i = 0; i < v.dim(); ++i) largest = std::max(largest, std::abs(v[i]));
      for (std::size_t i = 0; i < v.dim(); ++i) {
        if (std::abs(v[i]) >= largest - 1e-12) {
          CHECK(v[i].imag() == 0.0);
          CHECK(v[i].real() >= 0.0);
          break;
        }
      }
    }
  }
}

TEST_CASE("eigen_hermitian handles exactly degenerate random spectra") {
  // U diag(l, l, m, m) U^dagger with U built from a random eigenbasis.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const EigenDecomposition basis = eigen_hermitian(oracle::random_hermitian(rng, 4));
    HermitianOperator a = HermitianOperator::zero(4);
    const double levels[] = {-0.5, -0.5, 2.0, 2.0};
    for (std::size_t i = 0; i < 4; ++i) {
      a += levels[i] * HermitianOperator::outer(basis.eigenvectors[i]);
    }
    const EigenDecomposition eig = eigen_hermitian(a);
    CHECK(orthonormality_error(eig) < 1e-9);
    CHECK(reconstruction_error(a, eig) < 1e-9);
  }
}

TEST_CASE("projector eigenvalues are exactly {0, 1}") {
  for (double theta = -4.0; theta < 4.0; theta += 0.05) {
    for (BasisSign s : {BasisSign::plus, BasisSign::minus}) {
      const EigenDecomposition eig = eigen_hermitian(projector(theta, s));
      CHECK(std::abs(eig.eigenvalues[0]) < 1e-12);
      CHECK(std::abs(eig.eigenvalues[1] - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("eigen_hermitian is deterministic") {
  std::mt19937_64 rng(99);
  const HermitianOperator a = oracle::random_hermitian(rng, 4);
  const EigenDecomposition e1 = eigen_hermitian(a);
  const EigenDecomposition e2 = eigen_hermitian(a);
  CHECK(e1.eigenvalues == e2.eigenvalues);
  for (std::size_t i = 0; i < 4; ++i) CHECK(max_abs_difference(e1.eigenvectors[i], e2.eigenvectors[i]) == 0.0);
}

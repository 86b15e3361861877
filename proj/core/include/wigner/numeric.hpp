#pragma once

// Fixed-size complex linear algebra for one- and two-qubit problems.
//
// Everything here works on dimension 2 or 4 only. Storage is inline
// (std::array), so all types are cheap value types with no heap traffic.
// Two-qubit indices follow the Kronecker convention: the A factor is the
// major index, so basis order is |HH>, |HV>, |VH>, |VV>.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace wigner {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceResidueTolerance = 1e-10;

class ComplexVector {
 public:
  static ComplexVector zeros(std::size_t dim);

  /// Dimension is taken from the number of entries; it must be 2 or 4.
  ComplexVector(std::initializer_list<Complex> entries);
  explicit ComplexVector(std::span<const Complex> entries);

  std::size_t dim() const noexcept { return dim_; }
  Complex operator[](std::size_t i) const { return data_[i]; }
  Complex& operator[](std::size_t i) { return data_[i]; }
  std::span<const Complex> entries() const noexcept { return {data_.data(), dim_}; }

  double norm() const;
  bool is_normalized(double tolerance = kNormTolerance) const;
  ComplexVector normalized() const;

  ComplexVector& operator+=(const ComplexVector& other);
  ComplexVector& operator-=(const ComplexVector& other);
  ComplexVector& operator*=(Complex scale);

 private:
  explicit ComplexVector(std::size_t dim);

  std::size_t dim_;
  std::array<Complex, 4> data_{};
};

ComplexVector operator+(ComplexVector a, const ComplexVector& b);
ComplexVector operator-(ComplexVector a, const ComplexVector& b);
ComplexVector operator*(Complex scale, ComplexVector v);

/// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const ComplexVector& a, const ComplexVector& b);

/// |a> (x) |b> for two single-qubit vectors.
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Largest entry-wise modulus of a - b.
double max_abs_difference(const ComplexVector& a, const ComplexVector& b);

class HermitianOperator {
 public:
  static HermitianOperator zero(std::size_t dim);
  static HermitianOperator identity(std::size_t dim);
  static HermitianOperator diagonal(std::initializer_list<double> values);
  /// |v><v| (not normalized by this call).
  static HermitianOperator outer(const ComplexVector& v);
  /// Row-major entries; rejects matrices that are not Hermitian within
  /// kHermitianTolerance or that contain non-finite values.
  static HermitianOperator from_entries(std::size_t dim,
                                        std::span<const Complex> row_major);

  std::size_t dim() const noexcept { return dim_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  std::span<const Complex> entries() const noexcept {
    return {data_.data(), dim_ * dim_};
  }

  double trace() const;
  double frobenius_norm() const;
  ComplexVector apply(const ComplexVector& v) const;
  /// <v|A|v>, which is real for Hermitian A.
  double expectation(const ComplexVector& v) const;

  HermitianOperator& operator+=(const HermitianOperator& other);
  HermitianOperator& operator-=(const HermitianOperator& other);
  HermitianOperator& operator*=(double scale);

 private:
  explicit HermitianOperator(std::size_t dim);

  std::size_t dim_;
  std::array<Complex, 16> data_{};
};

HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b);
HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b);
HermitianOperator operator*(double scale, HermitianOperator a);

double max_abs_difference(const HermitianOperator& a, const HermitianOperator& b);

/// Kronecker product of two 2x2 operators, A index major.
HermitianOperator tensor_product(const HermitianOperator& a,
                                 const HermitianOperator& b);

/// Tr(a b). Throws NumericalConsistencyError if the imaginary part of the
/// trace is not negligible.
double trace_of_product(const HermitianOperator& a, const HermitianOperator& b);

struct EigenDecomposition {
  std::vector<double> eigenvalues;          // ascending
  std::vector<ComplexVector> eigenvectors;  // same order, orthonormal
};

inline constexpr double kJacobiOffDiagonalTolerance = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kDegeneracyTolerance = 1e-9;

/// Full eigendecomposition by cyclic complex Jacobi rotations.
///
/// Eigenvalues come back ascending. Eigenvectors of numerically degenerate
/// eigenvalues are re-orthonormalized, and each eigenvector is rotated so its
/// first largest-modulus component is real and non-negative. Throws
/// ConvergenceError if the sweep cap is reached.
EigenDecomposition eigen_hermitian(const HermitianOperator& a);

}  // namespace wigner

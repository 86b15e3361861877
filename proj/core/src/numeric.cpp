#include "wigner/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wigner/errors.hpp"

namespace wigner {
namespace {

void require_dim(std::size_t dim, const char* what) {
  if (dim != 2 && dim != 4) {
    throw InvalidDimensionError(std::string(what) + ": dimension must be 2 or 4, got " +
                                std::to_string(dim));
  }
}

void require_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(what) + ": non-finite entry");
  }
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InvalidDimensionError(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexVector

ComplexVector::ComplexVector(std::size_t dim) : dim_(dim) { require_dim(dim, "ComplexVector"); }

ComplexVector ComplexVector::zeros(std::size_t dim) { return ComplexVector(dim); }

ComplexVector::ComplexVector(std::initializer_list<Complex> entries)
    : ComplexVector(std::span<const Complex>(entries.begin(), entries.size())) {}

ComplexVector::ComplexVector(std::span<const Complex> entries) : dim_(entries.size()) {
  require_dim(dim_, "ComplexVector");
  for (std::size_t i = 0; i < dim_; ++i) {
    require_finite(entries[i], "ComplexVector");
    data_[i] = entries[i];
  }
}

double ComplexVector::norm() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += std::norm(data_[i]);
  return std::sqrt(sum);
}

bool ComplexVector::is_normalized(double tolerance) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += std::norm(data_[i]);
  return std::abs(sum - 1.0) <= tolerance;
}

ComplexVector ComplexVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw DomainError("ComplexVector::normalized: zero vector");
  ComplexVector out = *this;
  out *= 1.0 / n;
  return out;
}

ComplexVector& ComplexVector::operator+=(const ComplexVector& other) {
  require_same_dim(dim_, other.dim_, "ComplexVector::operator+=");
  for (std::size_t i = 0; i < dim_; ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexVector& ComplexVector::operator-=(const ComplexVector& other) {
  require_same_dim(dim_, other.dim_, "ComplexVector::operator-=");
  for (std::size_t i = 0; i < dim_; ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexVector& ComplexVector::operator*=(Complex scale) {
  for (std::size_t i = 0; i < dim_; ++i) data_[i] *= scale;
  return *this;
}

ComplexVector operator+(ComplexVector a, const ComplexVector& b) { return a += b; }
ComplexVector operator-(ComplexVector a, const ComplexVector& b) { return a -= b; }
ComplexVector operator*(Complex scale, ComplexVector v) { return v *= scale; }

Complex inner_product(const ComplexVector& a, const ComplexVector& b) {
  require_same_dim(a.dim(), b.dim(), "inner_product");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw InvalidDimensionError("kron: both factors must have dimension 2");
  }
  return ComplexVector{a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

double max_abs_difference(const ComplexVector& a, const ComplexVector& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_difference");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// ---------------------------------------------------------------------------
// HermitianOperator

HermitianOperator::HermitianOperator(std::size_t dim) : dim_(dim) {
  require_dim(dim, "HermitianOperator");
}

HermitianOperator HermitianOperator::zero(std::size_t dim) { return HermitianOperator(dim); }

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  HermitianOperator out(dim);
  for (std::size_t i = 0; i < dim; ++i) out.data_[i * dim + i] = 1.0;
  return out;
}

HermitianOperator HermitianOperator::diagonal(std::initializer_list<double> values) {
  HermitianOperator out(values.size());
  std::size_t i = 0;
  for (double v : values) {
    require_finite(v, "HermitianOperator::diagonal");
    out.data_[i * out.dim_ + i] = v;
    ++i;
  }
  return out;
}

HermitianOperator HermitianOperator::outer(const ComplexVector& v) {
  HermitianOperator out(v.dim());
  for (std::size_t r = 0; r < v.dim(); ++r) {
    for (std::size_t c = 0; c < v.dim(); ++c) {
      out.data_[r * v.dim() + c] = v[r] * std::conj(v[c]);
    }
    out.data_[r * v.dim() + r] = std::norm(v[r]);
  }
  return out;
}

HermitianOperator HermitianOperator::from_entries(std::size_t dim,
                                                  std::span<const Complex> row_major) {
  HermitianOperator out(dim);
  if (row_major.size() != dim * dim) {
    throw InvalidDimensionError("HermitianOperator::from_entries: expected " +
                                std::to_string(dim * dim) + " entries, got " +
                                std::to_string(row_major.size()));
  }
  for (std::size_t i = 0; i < row_major.size(); ++i) {
    require_finite(row_major[i], "HermitianOperator::from_entries");
    out.data_[i] = row_major[i];
  }
  for (std::size_t r = 0; r < dim; ++r) {
    if (std::abs(out(r, r).imag()) > kHermitianTolerance) {
      throw DomainError("HermitianOperator::from_entries: diagonal entry " + std::to_string(r) +
                        " has a non-zero imaginary part");
    }
    for (std::size_t c = r + 1; c < dim; ++c) {
      if (std::abs(out(r, c) - std::conj(out(c, r))) > kHermitianTolerance) {
        throw DomainError("HermitianOperator::from_entries: matrix is not Hermitian at (" +
                          std::to_string(r) + "," + std::to_string(c) + ")");
      }
    }
  }
  return out;
}

double HermitianOperator::trace() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) sum += data_[i * dim_ + i].real();
  return sum;
}

double HermitianOperator::frobenius_norm() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < dim_ * dim_; ++i) sum += std::norm(data_[i]);
  return std::sqrt(sum);
}

ComplexVector HermitianOperator::apply(const ComplexVector& v) const {
  require_same_dim(dim_, v.dim(), "HermitianOperator::apply");
  ComplexVector out = ComplexVector::zeros(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex sum = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) sum += data_[r * dim_ + c] * v[c];
    out[r] = sum;
  }
  return out;
}

double HermitianOperator::expectation(const ComplexVector& v) const {
  return inner_product(v, apply(v)).real();
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
  require_same_dim(dim_, other.dim_, "HermitianOperator::operator+=");
  for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] += other.data_[i];
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& other) {
  require_same_dim(dim_, other.dim_, "HermitianOperator::operator-=");
  for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] -= other.data_[i];
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double scale) {
  for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] *= scale;
  return *this;
}

HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) { return a -= b; }
HermitianOperator operator*(double scale, HermitianOperator a) { return a *= scale; }

double max_abs_difference(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_difference");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim() * a.dim(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

HermitianOperator tensor_product(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw InvalidDimensionError("tensor_product: both factors must have dimension 2");
  }
  std::array<Complex, 16> out{};
  for (std::size_t ar = 0; ar < 2; ++ar)
    for (std::size_t ac = 0; ac < 2; ++ac)
      for (std::size_t br = 0; br < 2; ++br)
        for (std::size_t bc = 0; bc < 2; ++bc)
          out[(2 * ar + br) * 4 + (2 * ac + bc)] = a(ar, ac) * b(br, bc);
  return HermitianOperator::from_entries(4, out);
}

double trace_of_product(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a.dim(), b.dim(), "trace_of_product");
  const std::size_t n = a.dim();
  Complex sum = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) sum += a(j, k) * b(k, j);
  if (std::abs(sum.imag()) >= kTraceResidueTolerance) {
    throw NumericalConsistencyError("trace_of_product: imaginary residue " +
                                    std::to_string(sum.imag()));
  }
  return sum.real();
}

// ---------------------------------------------------------------------------
// Jacobi eigensolver

namespace {

double off_diagonal_norm(const std::array<Complex, 16>& m, std::size_t n) {
  double sum = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c) sum += std::norm(m[r * n + c]);
  return std::sqrt(sum);
}

// One complex Givens rotation annihilating m(p,q). J = U P where
// U = diag(.., e^{-i phi} at q, ..) makes m(p,q) real and P is the classic
// real symmetric Jacobi rotation.
void rotate(std::array<Complex, 16>& m, std::array<Complex, 16>& v, std::size_t n,
            std::size_t p, std::size_t q) {
  const Complex b = m[p * n + q];
  const double abs_b = std::abs(b);
  if (abs_b == 0.0) return;
  const Complex phase = std::conj(b) / abs_b;  // e^{-i phi}
  const double a_pp = m[p * n + p].real();
  const double a_qq = m[q * n + q].real();
  const double theta = (a_qq - a_pp) / (2.0 * abs_b);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex j_pp = c;
  const Complex j_pq = s;
  const Complex j_qp = -s * phase;
  const Complex j_qq = c * phase;

  for (std::size_t r = 0; r < n; ++r) {
    const Complex mp = m[r * n + p];
    const Complex mq = m[r * n + q];
    m[r * n + p] = mp * j_pp + mq * j_qp;
    m[r * n + q] = mp * j_pq + mq * j_qq;
    const Complex vp = v[r * n + p];
    const Complex vq = v[r * n + q];
    v[r * n + p] = vp * j_pp + vq * j_qp;
    v[r * n + q] = vp * j_pq + vq * j_qq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex xp = m[p * n + k];
    const Complex xq = m[q * n + k];
    m[p * n + k] = std::conj(j_pp) * xp + std::conj(j_qp) * xq;
    m[q * n + k] = std::conj(j_pq) * xp + std::conj(j_qq) * xq;
  }
  m[p * n + q] = 0.0;
  m[q * n + p] = 0.0;
  m[p * n + p] = m[p * n + p].real();
  m[q * n + q] = m[q * n + q].real();
}

void fix_phase(ComplexVector& vec) {
  double largest = 0.0;
  for (std::size_t i = 0; i < vec.dim(); ++i) largest = std::max(largest, std::abs(vec[i]));
  for (std::size_t i = 0; i < vec.dim(); ++i) {
    if (std::abs(vec[i]) >= largest - 1e-12) {
      const Complex z = vec[i];
      vec *= std::conj(z) / std::abs(z);
      vec[i] = std::abs(z);
      return;
    }
  }
}

}  // namespace

EigenDecomposition eigen_hermitian(const HermitianOperator& a) {
  const std::size_t n = a.dim();
  std::array<Complex, 16> m{};
  std::array<Complex, 16> v{};
  std::copy(a.entries().begin(), a.entries().end(), m.begin());
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double threshold = kJacobiOffDiagonalTolerance * std::max(1.0, a.frobenius_norm());
  double off = off_diagonal_norm(m, n);
  int sweeps = 0;
  while (off >= threshold) {
    if (sweeps == kJacobiMaxSweeps) {
      throw ConvergenceError("eigen_hermitian: no convergence after " +
                                 std::to_string(kJacobiMaxSweeps) + " sweeps",
                             off);
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(m, v, n, p, q);
    ++sweeps;
    off = off_diagonal_norm(m, n);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return m[i * n + i].real() < m[j * n + j].real();
  });

  EigenDecomposition out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t idx : order) {
    out.eigenvalues.push_back(m[idx * n + idx].real());
    ComplexVector col = ComplexVector::zeros(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = v[r * n + idx];
    out.eigenvectors.push_back(col);
  }

  // Gram-Schmidt inside each degenerate cluster, in sorted order.
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && out.eigenvalues[end] - out.eigenvalues[end - 1] < kDegeneracyTolerance) {
      ++end;
    }
    for (std::size_t i = start; i < end; ++i) {
      ComplexVector& vec = out.eigenvectors[i];
      for (std::size_t j = start; j < i; ++j) {
        vec -= inner_product(out.eigenvectors[j], vec) * out.eigenvectors[j];
      }
      vec = vec.normalized();
    }
    start = end;
  }

  for (auto& vec : out.eigenvectors) fix_phase(vec);
  return out;
}

}  // namespace wigner

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qent {

using Complex = std::complex<double>;

/// Dense complex matrix with row-major storage and value semantics.
///
/// Sized for the density matrices and operators handled here (a few tens
/// of rows at most); nothing is blocked, tiled, or lazy.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero-filled rows x cols matrix. Both dimensions must be positive.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  /// Wraps an existing row-major entry vector; entries.size() must equal
  /// rows * cols.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_ && rows_ > 0; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix transpose() const;
  ComplexMatrix adjoint() const;

  Complex trace() const;
  double frobenius_norm() const;

  /// Largest |a_ij - conj(a_ji)| over all entry pairs.
  double max_hermitian_asymmetry() const;
  bool is_hermitian(double tol) const { return square() && max_hermitian_asymmetry() <= tol; }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scalar) {
    lhs *= scalar;
    return lhs;
  }
  friend ComplexMatrix operator*(Complex scalar, ComplexMatrix rhs) {
    rhs *= scalar;
    return rhs;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  /// Exact entrywise equality (no tolerance). Useful for permutation-only
  /// transforms such as the partial transpose.
  friend bool operator==(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.entries_ == rhs.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Kronecker (tensor) product, row-major composite index a-major.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qent

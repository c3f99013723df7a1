#pragma once

#include <vector>

#include "qent/complex_matrix.hpp"

namespace qent {

/// Every numerical threshold used by the library, in one record so tests
/// can tighten or loosen them deliberately. Defaults are the contract.
struct Tolerances {
  /// Max |a_ij - conj(a_ji)| accepted by the Hermitian check.
  double hermitian = 1e-10;
  /// Jacobi convergence: off-diagonal Frobenius norm <= jacobi * ||m||_F.
  double jacobi = 1e-12;
  /// Jacobi iteration cap, in full sweeps over all index pairs.
  int max_sweeps = 100;
  /// Accepted drift of traces that must equal 1.
  double trace_check = 1e-9;
  /// Eigenvalue floor for positive-semidefinite checks and the PPT flag.
  double psd = 1e-9;
  /// Spectral negativity round-off this far below zero is clamped to 0.
  double negativity_clamp = 1e-12;
  /// Largest tolerated disagreement between the spectral and the
  /// Schmidt-coefficient negativity before it is treated as a bug.
  double consistency = 1e-6;
  /// Default tolerance of the randomized property suites.
  double property = 1e-9;
  /// Accepted deviation from 1 of user-supplied squared norms; inputs
  /// further out are rejected instead of silently renormalized.
  double input_normalization = 1e-6;
};

struct Eigensystem {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< column k pairs with values[k]
};

/// Eigenvalues of a Hermitian matrix, sorted ascending.
///
/// Uses cyclic Jacobi rotations; matrices here are small (<= 25x25 in
/// practice) so reproducibility wins over asymptotic speed. Throws
/// NotSquareError, NotHermitianError (with the observed asymmetry), or
/// NoConvergenceError if the sweep cap is hit.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, const Tolerances& tol = {});

/// Eigenvalues plus the accumulated unitary of eigenvectors.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m, const Tolerances& tol = {});

/// Singular values sorted descending, computed as the square roots of the
/// eigenvalues of m^dagger * m with negative round-off clamped to zero.
/// Returns min(rows, cols) values.
std::vector<double> singular_values(const ComplexMatrix& m, const Tolerances& tol = {});

/// Trace norm (nuclear norm). For matrices Hermitian within tol.hermitian
/// this is the sum of absolute eigenvalues, otherwise the sum of singular
/// values.
double trace_norm(const ComplexMatrix& m, const Tolerances& tol = {});

}  // namespace qent

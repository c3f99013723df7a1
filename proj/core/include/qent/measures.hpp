#pragma once

#include <cstddef>
#include <optional>

#include "qent/complex_matrix.hpp"
#include "qent/linalg.hpp"
#include "qent/states.hpp"

namespace qent {

/// Two realizations of the diagonal ladder operator. `cyclic` shifts the
/// correlated diagonal by one (X|i,i> = |i+1,i+1> mod d), giving the sum of
/// adjacent-pair Schmidt products. `all_pairs` couples every diagonal pair,
/// giving the full sum over i < j. The two coincide exactly for d = 3 and
/// diverge for d >= 4.
enum class LadderVariant { cyclic, all_pairs };

/// Every measure computed for one state. Concurrence and the
/// negativity/concurrence relation residual are defined for qutrit pairs
/// only and are absent for other dimensions.
struct MeasureReport {
  double negativity = 0.0;           ///< spectral path, in [0, 1]
  double log_negativity = 0.0;       ///< bits, >= 0
  std::optional<double> concurrence; ///< in [0, 1], d = 3 only
  double ladder_expectation = 0.0;   ///< cyclic variant
  double entropy = 0.0;              ///< bits, in [0, log2 d]
  std::optional<double> relation_residual;  ///< d = 3 only, ~0 for pure states
  bool ppt = true;
};

/// Negativity from the spectrum of the partial transpose:
/// (||rho^T_A||_1 - 1) / (d - 1) with d = min(dim_a, dim_b), so a maximally
/// entangled state scores 1 regardless of dimension. Round-off slightly
/// below zero is clamped to 0. Throws DegenerateDimensionError for d = 1.
double negativity_spectral(const DensityMatrix& r, const Tolerances& tol = {});

/// The same quantity from Schmidt coefficients of a pure state:
/// 2 * sum_{i<j} k_i k_j / (d - 1). For d = 3 this is exactly
/// k1 k2 + k2 k3 + k3 k1.
double negativity_schmidt(const SchmidtVector& k, std::size_t d);

/// log2 ||rho^T_A||_1, an upper bound on distillable entanglement.
double log_negativity(const DensityMatrix& r, const Tolerances& tol = {});

/// Expectation of the ladder operator on a Schmidt-form state:
/// cyclic   -> sum_i k_i k_{(i+1) mod d}
/// all_pairs-> sum_{i<j} k_i k_j
double ladder_expectation(const SchmidtVector& k, LadderVariant variant);

/// The ladder operator as a d^2 x d^2 matrix on the composite space.
/// The cyclic variant maps |i,i> to |i+1 mod d, i+1 mod d> and annihilates
/// |i,j> with i != j; the all-pairs variant is the Hermitian part of
/// sum_{i<j} |jj><ii|, so its expectation on real non-negative Schmidt
/// states equals the all-pairs sum.
ComplexMatrix ladder_matrix(std::size_t d, LadderVariant variant);

/// Qutrit concurrence sqrt(3 (k1^2 k2^2 + k2^2 k3^2 + k3^2 k1^2)).
/// Throws WrongDimensionError unless k has exactly three coefficients.
double concurrence_schmidt(const SchmidtVector& k);

/// Cross-check of the concurrence that never touches Schmidt coefficients:
/// sqrt((3/2) (1 - tr rho_A^2)) from the reduced-density purity. Requires a
/// normalized 3x3 state.
double concurrence_purity(const PureState& s);

/// Entanglement entropy -sum k_i^2 log2 k_i^2 with 0 log 0 := 0.
double entanglement_entropy(const SchmidtVector& k);

/// Residual of the algebraic identity tying negativity N and concurrence C
/// for qutrit pairs: N^2 - C^2/3 - 2 k1 k2 k3 sqrt(1 + 2N). Zero up to
/// round-off for every valid Schmidt triple; the positive branch is forced
/// by the coefficients being non-negative.
double relation_residual(const SchmidtVector& k);

/// Peres test: true iff the partial transpose has no eigenvalue below
/// -tol.psd. A negative partial transpose implies entanglement.
bool is_ppt(const DensityMatrix& r, const Tolerances& tol = {});

/// Computes every measure for a normalized pure state. The negativity field
/// is the spectral value; the Schmidt-coefficient value is computed as well
/// and a disagreement beyond tol.consistency throws
/// InternalInconsistencyError, since the two must agree for pure states.
MeasureReport full_report(const PureState& s, const Tolerances& tol = {});

}  // namespace qent

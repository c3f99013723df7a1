#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "qent/complex_matrix.hpp"
#include "qent/linalg.hpp"

namespace qent {

enum class Subsystem { A, B };

/// Bipartite pure state. Amplitudes c_ij are stored row-major over the
/// composite index i * dim_b + j (subsystem A major); this convention is
/// shared with DensityMatrix and the partial transpose and must not drift.
class PureState {
 public:
  PureState(std::size_t dim_a, std::size_t dim_b, std::vector<Complex> amplitudes);

  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  std::size_t dim() const { return dim_a_ * dim_b_; }

  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t i, std::size_t j) const {
    return amplitudes_[i * dim_b_ + j];
  }

  /// Euclidean norm of the amplitude vector.
  double norm() const;

  /// The amplitude matrix c as a dim_a x dim_b ComplexMatrix.
  ComplexMatrix coefficient_matrix() const;

 private:
  std::size_t dim_a_;
  std::size_t dim_b_;
  std::vector<Complex> amplitudes_;
};

/// Schmidt coefficients of a bipartite pure state: non-negative, sorted
/// descending, squares summing to one. Construction sorts and renormalizes
/// small drift; squared norms off by more than input_tol are rejected.
class SchmidtVector {
 public:
  explicit SchmidtVector(std::vector<double> coefficients, double input_tol = 1e-6);

  std::size_t size() const { return k_.size(); }
  double operator[](std::size_t i) const { return k_[i]; }
  const std::vector<double>& coefficients() const { return k_; }

 private:
  std::vector<double> k_;
};

/// Density matrix of a bipartite system with a fixed dimension split.
/// Construction validates hermiticity, unit trace, and positive
/// semidefiniteness (up to the configured tolerances).
class DensityMatrix {
 public:
  DensityMatrix(std::size_t dim_a, std::size_t dim_b, ComplexMatrix matrix,
                const Tolerances& tol = {});

  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  std::size_t dim_a_;
  std::size_t dim_b_;
  ComplexMatrix matrix_;
};

/// Returns the unit-norm state pointing in the same direction.
/// Throws ZeroStateError on an all-zero amplitude vector.
PureState normalize(const PureState& s);

/// Schmidt coefficients of a normalized state: the singular values of its
/// dim_a x dim_b coefficient matrix, length min(dim_a, dim_b).
SchmidtVector schmidt_decompose(const PureState& s, const Tolerances& tol = {});

/// rho = |s><s| for a normalized state.
DensityMatrix density_from_pure(const PureState& s, const Tolerances& tol = {});

/// Partial transpose over one subsystem. With composite indices (i, j) and
/// (k, l), transposing subsystem A maps entry [(i,j),(k,l)] to [(k,j),(i,l)].
/// Pure index permutation; applying it twice restores the input exactly.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                                Subsystem subsystem);
ComplexMatrix partial_transpose(const DensityMatrix& r, Subsystem subsystem);

/// Reduced density matrix of one subsystem of a normalized pure state.
ComplexMatrix reduced_density(const PureState& s, Subsystem subsystem);

/// Applies u_a (x) u_b to a pure state. Both matrices must be square and
/// match the corresponding subsystem dimension; unitarity is the caller's
/// business.
PureState apply_local_unitary(const PureState& s, const ComplexMatrix& u_a,
                              const ComplexMatrix& u_b);

/// Reads the amplitude file format: a header line `dims,d_A,d_B`, then one
/// line `i,j,re,im` per nonzero amplitude (0-based indices); unlisted
/// amplitudes are zero and the state is normalized on load. Blank lines and
/// lines starting with '#' are ignored.
PureState parse_amplitude_stream(std::istream& in);
PureState load_amplitude_file(const std::filesystem::path& path);

}  // namespace qent

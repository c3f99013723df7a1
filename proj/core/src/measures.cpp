#include "qent/measures.hpp"

#include <cmath>
#include <sstream>

#include "qent/errors.hpp"

namespace qent {

namespace {

std::size_t smaller_dimension(const DensityMatrix& r) {
  return std::min(r.dim_a(), r.dim_b());
}

double pairwise_product_sum(const SchmidtVector& k) {
  double sum = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i + 1; j < k.size(); ++j) sum += k[i] * k[j];
  return sum;
}

}  // namespace

double negativity_spectral(const DensityMatrix& r, const Tolerances& tol) {
  const std::size_t d = smaller_dimension(r);
  if (d < 2) {
    throw DegenerateDimensionError(
        "negativity is undefined for min(dim_a, dim_b) = 1: the (d - 1) normalization vanishes");
  }
  const double tn = trace_norm(partial_transpose(r, Subsystem::A), tol);
  double value = (tn - 1.0) / (static_cast<double>(d) - 1.0);
  if (value < 0.0 && value >= -tol.negativity_clamp) value = 0.0;
  return value;
}

double negativity_schmidt(const SchmidtVector& k, std::size_t d) {
  if (d < 2) {
    throw DegenerateDimensionError(
        "negativity is undefined for d = 1: the (d - 1) normalization vanishes");
  }
  if (k.size() != d) {
    std::ostringstream msg;
    msg << "Schmidt vector has " << k.size() << " coefficients, expected " << d;
    throw DimensionMismatchError(msg.str());
  }
  return 2.0 * pairwise_product_sum(k) / (static_cast<double>(d) - 1.0);
}

double log_negativity(const DensityMatrix& r, const Tolerances& tol) {
  return std::log2(trace_norm(partial_transpose(r, Subsystem::A), tol));
}

double ladder_expectation(const SchmidtVector& k, LadderVariant variant) {
  const std::size_t d = k.size();
  if (d < 2) {
    throw DegenerateDimensionError("ladder expectation requires d >= 2");
  }
  if (variant == LadderVariant::all_pairs) return pairwise_product_sum(k);
  double sum = 0.0;
  for (std::size_t i = 0; i < d; ++i) sum += k[i] * k[(i + 1) % d];
  return sum;
}

ComplexMatrix ladder_matrix(std::size_t d, LadderVariant variant) {
  if (d < 2) throw DegenerateDimensionError("ladder operator requires d >= 2");
  ComplexMatrix x(d * d, d * d);
  if (variant == LadderVariant::cyclic) {
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t from = i * d + i;
      const std::size_t next = (i + 1) % d;
      const std::size_t to = next * d + next;
      x(to, from) = 1.0;
    }
  } else {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        const std::size_t ii = i * d + i;
        const std::size_t jj = j * d + j;
        x(jj, ii) = 0.5;
        x(ii, jj) = 0.5;
      }
  }
  return x;
}

double concurrence_schmidt(const SchmidtVector& k) {
  if (k.size() != 3) {
    std::ostringstream msg;
    msg << "qutrit concurrence requires exactly 3 Schmidt coefficients, got " << k.size();
    throw WrongDimensionError(msg.str());
  }
  const double s = k[0] * k[0] * k[1] * k[1] + k[1] * k[1] * k[2] * k[2] +
                   k[2] * k[2] * k[0] * k[0];
  return std::sqrt(3.0 * s);
}

double concurrence_purity(const PureState& s) {
  if (s.dim_a() != 3 || s.dim_b() != 3) {
    throw WrongDimensionError("purity-based concurrence is defined for 3x3 states");
  }
  // tr(rho_A^2) for Hermitian rho_A is its squared Frobenius norm.
  const ComplexMatrix rho_a = reduced_density(s, Subsystem::A);
  const double fro = rho_a.frobenius_norm();
  const double purity = fro * fro;
  return std::sqrt(std::max(0.0, 1.5 * (1.0 - purity)));
}

double entanglement_entropy(const SchmidtVector& k) {
  double e = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    const double p = k[i] * k[i];
    if (p > 0.0) e -= p * std::log2(p);
  }
  return std::max(e, 0.0);
}

double relation_residual(const SchmidtVector& k) {
  if (k.size() != 3) {
    throw WrongDimensionError("the negativity/concurrence relation is for qutrit pairs");
  }
  const double n = negativity_schmidt(k, 3);
  const double c = concurrence_schmidt(k);
  return n * n - c * c / 3.0 - 2.0 * k[0] * k[1] * k[2] * std::sqrt(1.0 + 2.0 * n);
}

bool is_ppt(const DensityMatrix& r, const Tolerances& tol) {
  const std::vector<double> evals =
      hermitian_eigenvalues(partial_transpose(r, Subsystem::A), tol);
  return evals.front() >= -tol.psd;
}

MeasureReport full_report(const PureState& s, const Tolerances& tol) {
  const std::size_t d = std::min(s.dim_a(), s.dim_b());
  if (d < 2) {
    throw DegenerateDimensionError("measures require min(dim_a, dim_b) >= 2");
  }
  const SchmidtVector k = schmidt_decompose(s, tol);
  const DensityMatrix rho = density_from_pure(s, tol);

  const double n_spectral = negativity_spectral(rho, tol);
  const double n_schmidt = negativity_schmidt(k, d);
  if (std::abs(n_spectral - n_schmidt) > tol.consistency) {
    std::ostringstream msg;
    msg << "spectral negativity " << n_spectral << " and Schmidt negativity " << n_schmidt
        << " disagree beyond " << tol.consistency
        << "; this points at an eigensolver or indexing bug";
    throw InternalInconsistencyError(msg.str());
  }

  MeasureReport report;
  report.negativity = n_spectral;
  report.log_negativity = log_negativity(rho, tol);
  report.ladder_expectation = ladder_expectation(k, LadderVariant::cyclic);
  report.entropy = entanglement_entropy(k);
  report.ppt = is_ppt(rho, tol);
  if (d == 3) {
    report.concurrence = concurrence_schmidt(k);
    report.relation_residual = relation_residual(k);
  }
  return report;
}

}  // namespace qent

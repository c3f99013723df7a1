#include "qent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qent/errors.hpp"

namespace qent {

namespace {

double offdiagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// One unitary plane rotation on rows/columns (p, q) chosen to zero the
// off-diagonal entry a(p, q). The rotation is the complex analogue of the
// classic symmetric Jacobi step: the phase of a(p, q) is folded into the
// sine so the remaining 2x2 problem is real.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex h = a(p, q);
  const double r = std::abs(h);
  if (r == 0.0) return;

  const Complex phase = h / r;
  const double alpha = a(p, p).real();
  const double beta = a(q, q).real();
  const double theta = (beta - alpha) / (2.0 * r);
  const double sign = theta >= 0.0 ? 1.0 : -1.0;
  const double t = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const std::size_t n = a.rows();
  // Columns p and q of a (right-multiplication by the rotation).
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * std::conj(phase) * akq;
    a(k, q) = s * phase * akp + c * akq;
  }
  // Rows p and q (left-multiplication by the adjoint rotation).
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * std::conj(phase) * apk + c * aqk;
  }
  // The rotation annihilates (p, q) analytically; remove the round-off.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
    v(k, q) = s * phase * vkp + c * vkq;
  }
}

}  // namespace

Eigensystem hermitian_eigensystem(const ComplexMatrix& m, const Tolerances& tol) {
  if (!m.square()) throw NotSquareError("eigensolver requires a square matrix");
  const double asymmetry = m.max_hermitian_asymmetry();
  if (asymmetry > tol.hermitian) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |a_ij - conj(a_ji)| = " << asymmetry
        << " exceeds tolerance " << tol.hermitian;
    throw NotHermitianError(msg.str(), asymmetry);
  }

  const std::size_t n = m.rows();
  // Work on the exactly Hermitian average so sub-tolerance asymmetry
  // cannot feed complex parts into the diagonal.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = a.frobenius_norm();

  if (scale > 0.0) {
    bool converged = false;
    for (int sweep = 0; sweep < tol.max_sweeps; ++sweep) {
      if (offdiagonal_norm(a) <= tol.jacobi * scale) {
        converged = true;
        break;
      }
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    if (!converged && offdiagonal_norm(a) > tol.jacobi * scale) {
      throw NoConvergenceError("Jacobi eigensolver did not converge within the sweep cap");
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  Eigensystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, const Tolerances& tol) {
  return hermitian_eigensystem(m, tol).values;
}

std::vector<double> singular_values(const ComplexMatrix& m, const Tolerances& tol) {
  // Eigenvalues of m^dagger m; one factorization algorithm serves both
  // the eigen and the singular value paths.
  const ComplexMatrix gram = m.adjoint() * m;
  std::vector<double> evals = hermitian_eigenvalues(gram, tol);

  std::vector<double> sv;
  sv.reserve(evals.size());
  for (auto it = evals.rbegin(); it != evals.rend(); ++it) {
    sv.push_back(std::sqrt(std::max(*it, 0.0)));
  }
  const std::size_t count = std::min(m.rows(), m.cols());
  sv.resize(count);
  return sv;
}

double trace_norm(const ComplexMatrix& m, const Tolerances& tol) {
  if (!m.square()) throw NotSquareError("trace norm requires a square matrix");
  double sum = 0.0;
  if (m.is_hermitian(tol.hermitian)) {
    for (double lambda : hermitian_eigenvalues(m, tol)) sum += std::abs(lambda);
  } else {
    for (double s : singular_values(m, tol)) sum += s;
  }
  return sum;
}

}  // namespace qent

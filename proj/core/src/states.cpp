#include "qent/states.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "qent/errors.hpp"

namespace qent {

namespace {

void require_normalized(const PureState& s, const char* who) {
  const double n = s.norm();
  if (std::abs(n - 1.0) > 1e-6) {
    std::ostringstream msg;
    msg << who << " requires a normalized state (norm = " << n << ")";
    throw Error(msg.str());
  }
}

}  // namespace

PureState::PureState(std::size_t dim_a, std::size_t dim_b, std::vector<Complex> amplitudes)
    : dim_a_(dim_a), dim_b_(dim_b), amplitudes_(std::move(amplitudes)) {
  if (dim_a == 0 || dim_b == 0) {
    throw DimensionMismatchError("subsystem dimensions must be positive");
  }
  if (amplitudes_.size() != dim_a * dim_b) {
    throw DimensionMismatchError("amplitude count does not match dim_a * dim_b");
  }
}

double PureState::norm() const {
  double sum = 0.0;
  for (const Complex& c : amplitudes_) sum += std::norm(c);
  return std::sqrt(sum);
}

ComplexMatrix PureState::coefficient_matrix() const {
  return ComplexMatrix(dim_a_, dim_b_, amplitudes_);
}

SchmidtVector::SchmidtVector(std::vector<double> coefficients, double input_tol)
    : k_(std::move(coefficients)) {
  if (k_.empty()) throw DimensionMismatchError("Schmidt vector must be nonempty");
  double sum_sq = 0.0;
  for (double k : k_) {
    if (k < 0.0) throw Error("Schmidt coefficients must be non-negative");
    sum_sq += k * k;
  }
  if (std::abs(sum_sq - 1.0) > input_tol) {
    std::ostringstream msg;
    msg << "Schmidt coefficients are not normalized: sum of squares = " << sum_sq;
    throw Error(msg.str());
  }
  const double scale = 1.0 / std::sqrt(sum_sq);
  for (double& k : k_) k *= scale;
  std::sort(k_.begin(), k_.end(), std::greater<double>());
}

DensityMatrix::DensityMatrix(std::size_t dim_a, std::size_t dim_b, ComplexMatrix matrix,
                             const Tolerances& tol)
    : dim_a_(dim_a), dim_b_(dim_b), matrix_(std::move(matrix)) {
  const std::size_t d = dim_a * dim_b;
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw DimensionMismatchError("density matrix size does not match dim_a * dim_b");
  }
  const double asymmetry = matrix_.max_hermitian_asymmetry();
  if (asymmetry > tol.hermitian) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian: max asymmetry " << asymmetry;
    throw NotHermitianError(msg.str(), asymmetry);
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > tol.trace_check) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr.real() << ", expected 1";
    throw Error(msg.str());
  }
  const std::vector<double> evals = hermitian_eigenvalues(matrix_, tol);
  if (!evals.empty() && evals.front() < -tol.psd) {
    std::ostringstream msg;
    msg << "density matrix is not positive semidefinite: min eigenvalue " << evals.front();
    throw Error(msg.str());
  }
}

PureState normalize(const PureState& s) {
  const double n = s.norm();
  if (n == 0.0) throw ZeroStateError("cannot normalize the zero state");
  std::vector<Complex> amps = s.amplitudes();
  for (Complex& c : amps) c /= n;
  return PureState(s.dim_a(), s.dim_b(), std::move(amps));
}

SchmidtVector schmidt_decompose(const PureState& s, const Tolerances& tol) {
  require_normalized(s, "schmidt_decompose");
  return SchmidtVector(singular_values(s.coefficient_matrix(), tol));
}

DensityMatrix density_from_pure(const PureState& s, const Tolerances& tol) {
  require_normalized(s, "density_from_pure");
  const std::size_t d = s.dim();
  ComplexMatrix rho(d, d);
  const std::vector<Complex>& c = s.amplitudes();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) rho(i, j) = c[i] * std::conj(c[j]);
  return DensityMatrix(s.dim_a(), s.dim_b(), std::move(rho), tol);
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                                Subsystem subsystem) {
  const std::size_t d = dim_a * dim_b;
  if (m.rows() != d || m.cols() != d) {
    throw DimensionMismatchError("matrix size does not match dim_a * dim_b");
  }
  ComplexMatrix out(d, d);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j)
      for (std::size_t k = 0; k < dim_a; ++k)
        for (std::size_t l = 0; l < dim_b; ++l) {
          const std::size_t row = i * dim_b + j;
          const std::size_t col = k * dim_b + l;
          const std::size_t src_row = subsystem == Subsystem::A ? k * dim_b + j : i * dim_b + l;
          const std::size_t src_col = subsystem == Subsystem::A ? i * dim_b + l : k * dim_b + j;
          out(row, col) = m(src_row, src_col);
        }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& r, Subsystem subsystem) {
  return partial_transpose(r.matrix(), r.dim_a(), r.dim_b(), subsystem);
}

ComplexMatrix reduced_density(const PureState& s, Subsystem subsystem) {
  require_normalized(s, "reduced_density");
  const std::size_t da = s.dim_a();
  const std::size_t db = s.dim_b();
  if (subsystem == Subsystem::A) {
    ComplexMatrix rho(da, da);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t k = 0; k < da; ++k) {
        Complex sum{0.0, 0.0};
        for (std::size_t j = 0; j < db; ++j)
          sum += s.amplitude(i, j) * std::conj(s.amplitude(k, j));
        rho(i, k) = sum;
      }
    return rho;
  }
  ComplexMatrix rho(db, db);
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t l = 0; l < db; ++l) {
      Complex sum{0.0, 0.0};
      for (std::size_t i = 0; i < da; ++i)
        sum += s.amplitude(i, j) * std::conj(s.amplitude(i, l));
      rho(j, l) = sum;
    }
  return rho;
}

PureState apply_local_unitary(const PureState& s, const ComplexMatrix& u_a,
                              const ComplexMatrix& u_b) {
  if (u_a.rows() != s.dim_a() || u_a.cols() != s.dim_a() || u_b.rows() != s.dim_b() ||
      u_b.cols() != s.dim_b()) {
    throw DimensionMismatchError("local unitary dimensions do not match the state");
  }
  // (u_a (x) u_b) |s> has coefficient matrix u_a * c * u_b^T.
  const ComplexMatrix c = u_a * s.coefficient_matrix() * u_b.transpose();
  return PureState(s.dim_a(), s.dim_b(), c.entries());
}

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t' || text.front() == '\r'))
    text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
    text.remove_suffix(1);
  return text;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no, const char* what) {
  T value{};
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end || field.empty()) {
    std::ostringstream msg;
    msg << "line " << line_no << ": cannot parse " << what << " from '" << std::string(field)
        << "'";
    throw ParseError(msg.str());
  }
  return value;
}

}  // namespace

PureState parse_amplitude_stream(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  bool have_dims = false;
  std::vector<Complex> amps;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    const auto fields = split_fields(body);
    if (!have_dims) {
      if (fields.size() != 3 || fields[0] != "dims") {
        std::ostringstream msg;
        msg << "line " << line_no << ": expected header 'dims,d_A,d_B'";
        throw ParseError(msg.str());
      }
      dim_a = parse_number<std::size_t>(fields[1], line_no, "d_A");
      dim_b = parse_number<std::size_t>(fields[2], line_no, "d_B");
      if (dim_a == 0 || dim_b == 0) {
        throw ParseError("subsystem dimensions must be positive");
      }
      amps.assign(dim_a * dim_b, Complex{0.0, 0.0});
      have_dims = true;
      continue;
    }

    if (fields.size() != 4) {
      std::ostringstream msg;
      msg << "line " << line_no << ": expected 'i,j,re,im'";
      throw ParseError(msg.str());
    }
    const auto i = parse_number<std::size_t>(fields[0], line_no, "index i");
    const auto j = parse_number<std::size_t>(fields[1], line_no, "index j");
    const double re = parse_number<double>(fields[2], line_no, "re");
    const double im = parse_number<double>(fields[3], line_no, "im");
    if (i >= dim_a || j >= dim_b) {
      std::ostringstream msg;
      msg << "line " << line_no << ": index (" << i << "," << j << ") out of range for "
          << dim_a << "x" << dim_b;
      throw ParseError(msg.str());
    }
    const auto [it, inserted] = seen.emplace(std::make_pair(i, j), line_no);
    if (!inserted) {
      std::ostringstream msg;
      msg << "line " << line_no << ": duplicate amplitude for (" << i << "," << j
          << "), first given on line " << it->second;
      throw ParseError(msg.str());
    }
    amps[i * dim_b + j] = Complex{re, im};
  }

  if (!have_dims) throw ParseError("missing 'dims,d_A,d_B' header");
  return normalize(PureState(dim_a, dim_b, std::move(amps)));
}

PureState load_amplitude_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open amplitude file: " + path.string());
  return parse_amplitude_stream(in);
}

}  // namespace qent

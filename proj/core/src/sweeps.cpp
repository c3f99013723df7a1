#include "qent/sweeps.hpp"

#include <cmath>
#include <stdexcept>

#include "qent/measures.hpp"
#include "qent/states.hpp"

namespace qent {

namespace {

SweepRow make_row(std::vector<double> params, const std::array<double, 3>& k) {
  SweepRow row;
  row.params = std::move(params);
  row.k = k;
  const SchmidtVector schmidt({k[0], k[1], k[2]});
  row.negativity = negativity_schmidt(schmidt, 3);
  row.concurrence = concurrence_schmidt(schmidt);
  return row;
}

}  // namespace

std::vector<SweepRow> sweep_x(std::size_t steps) {
  if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
  std::vector<SweepRow> rows;
  rows.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(steps - 1);
    const double k12 = std::sqrt(x / 2.0);
    const double k3 = std::sqrt(1.0 - x);
    rows.push_back(make_row({x}, {k12, k12, k3}));
  }
  return rows;
}

std::vector<SweepRow> sweep_sphere(std::size_t steps) {
  if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
  constexpr double half_pi = 1.5707963267948966;
  std::vector<SweepRow> rows;
  rows.reserve(steps * steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const double theta = half_pi * static_cast<double>(i) / static_cast<double>(steps - 1);
    for (std::size_t j = 0; j < steps; ++j) {
      const double phi = half_pi * static_cast<double>(j) / static_cast<double>(steps - 1);
      const double k1 = std::sin(theta) * std::cos(phi);
      const double k2 = std::sin(theta) * std::sin(phi);
      const double k3 = std::cos(theta);
      rows.push_back(make_row({theta, phi}, {k1, k2, k3}));
    }
  }
  return rows;
}

}  // namespace qent

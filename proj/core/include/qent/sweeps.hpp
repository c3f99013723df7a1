#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace qent {

/// One grid point of a parametrized family of qutrit Schmidt triples.
/// `params` holds {x} for the line family and {theta, phi} (radians) for
/// the spherical family; `k` is in parametrization order, not sorted.
struct SweepRow {
  std::vector<double> params;
  std::array<double, 3> k{};
  double negativity = 0.0;
  double concurrence = 0.0;
};

/// x sampled uniformly on [0, 1] inclusive, k1 = k2 = sqrt(x/2),
/// k3 = sqrt(1 - x). The family runs from the product state at x = 0
/// through maximal entanglement at x = 2/3 to the embedded two-level state
/// at x = 1. steps >= 2; endpoints are always on the grid.
std::vector<SweepRow> sweep_x(std::size_t steps);

/// (theta, phi) grid on [0, pi/2] x [0, pi/2] inclusive, theta-major,
/// with k1 = sin(theta) cos(phi), k2 = sin(theta) sin(phi), k3 = cos(theta).
/// Returns steps * steps rows.
std::vector<SweepRow> sweep_sphere(std::size_t steps);

}  // namespace qent

#pragma once

// Numerical cross-checks for the lumped spring constants. These re-derive the
// springs from the underlying mechanics instead of the closed formulas.

#include <cstddef>
#include <vector>

#include "orthoglide/errors.hpp"

namespace orthoglide {

struct BeamSpec {
  double youngs_modulus = 0.0;  // Pa
  double inertia = 0.0;         // m^4
  double length = 0.0;          // m
  std::size_t intervals = 0;    // >= 4
};

inline void validate(const BeamSpec& spec) {
  if (spec.intervals < 4) throw Error(ErrorKind::ValidationFailed, "n", "beam needs at least 4 intervals");
  if (!(spec.youngs_modulus > 0.0) || !(spec.inertia > 0.0) || !(spec.length > 0.0)) {
    throw Error(ErrorKind::ValidationFailed, "beam", "beam properties must be strictly positive");
  }
}

/// Deflection y(x_k), k = 0..n, of a cantilever clamped at x = 0 under a tip
/// load: E I y'' = F (L - x), y(0) = y'(0) = 0. Central second differences,
/// clamp imposed with the symmetric ghost node y(-h) = y(h).
inline std::vector<double> cantilever_deflection(const BeamSpec& spec, double force) {
  validate(spec);
  const std::size_t n = spec.intervals;
  const double h = spec.length / static_cast<double>(n);
  const double flexural = spec.youngs_modulus * spec.inertia;
  auto curvature = [&](std::size_t k) {
    return force * (spec.length - static_cast<double>(k) * h) / flexural;
  };

  std::vector<double> y(n + 1, 0.0);
  y[1] = 0.5 * h * h * curvature(0);
  for (std::size_t k = 1; k < n; ++k) y[k + 1] = 2.0 * y[k] - y[k - 1] + h * h * curvature(k);
  return y;
}

/// k = F L / theta with theta ~ y(L) / L. Converges to 3 E I / L as O(1/n^2).
inline double cantilever_equivalent_torsional_stiffness(const BeamSpec& spec, double force) {
  if (force == 0.0) throw Error(ErrorKind::ValidationFailed, "F", "tip force must be non-zero");
  const std::vector<double> y = cantilever_deflection(spec, force);
  const double theta = y.back() / spec.length;
  return force * spec.length / theta;
}

/// Two axial bars at spacing d under a couple T: bar forces +-T/d, each bar
/// changes length by delta = (T/d) L_B / (E S_B), the far link turns by 2 delta / d.
inline double parallelogram_torsion_oracle(double youngs_modulus, double bar_area, double bar_spacing,
                                           double bar_length, double torque) {
  if (!(youngs_modulus > 0.0) || !(bar_area > 0.0) || !(bar_spacing > 0.0) || !(bar_length > 0.0) ||
      !(torque > 0.0)) {
    throw Error(ErrorKind::ValidationFailed, "parallelogram", "inputs must be strictly positive");
  }
  const double bar_force = torque / bar_spacing;
  const double elongation = bar_force * bar_length / (youngs_modulus * bar_area);
  const double rotation = 2.0 * elongation / bar_spacing;
  return torque / rotation;
}

}  // namespace orthoglide

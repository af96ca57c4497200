#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "orthoglide/errors.hpp"

namespace orthoglide {

/// Design description of the machine, SI units throughout.
///
/// The foot is a rectangular beam with sides `foot_height` (h_f) and
/// `foot_width` (b_f). h_f is the side that resists bending under the leg
/// force, b_f the side that resists bending under the leg torque; the two
/// section inertias follow from that convention and are never stored.
struct MachineParameters {
  double youngs_modulus = 0.0;                    // E, Pa
  std::optional<double> actuator_stiffness;       // k_act, N/m; empty = rigid
  double foot_length = 0.0;                       // L_f, m
  double foot_height = 0.0;                       // h_f, m
  double foot_width = 0.0;                        // b_f, m
  double foot_angle = 0.0;                        // lambda, rad, w.r.t. the rail axis
  double bar_spacing = 0.0;                       // d, m
  double bar_length = 0.0;                        // L_B, m
  double bar_area = 0.0;                          // S_B, m^2
  double workspace_half_edge = 0.0;               // m

  bool rigid_actuator() const noexcept { return !actuator_stiffness.has_value(); }

  /// I_f1 = b_f h_f^3 / 12
  double foot_inertia_force() const noexcept {
    return foot_width * foot_height * foot_height * foot_height / 12.0;
  }
  /// I_f2 = h_f b_f^3 / 12
  double foot_inertia_torque() const noexcept {
    return foot_height * foot_width * foot_width * foot_width / 12.0;
  }

  bool operator==(const MachineParameters&) const = default;
};

namespace detail {
inline void require_positive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::ValidationFailed, field,
                std::string(field) + " must be finite and strictly positive");
  }
}
}  // namespace detail

/// Throws ValidationFailed naming the first offending field (file key).
inline void validate(const MachineParameters& p) {
  detail::require_positive(p.youngs_modulus, "E");
  if (p.actuator_stiffness) detail::require_positive(*p.actuator_stiffness, "k_act");
  detail::require_positive(p.foot_length, "L_f");
  detail::require_positive(p.foot_height, "h_f");
  detail::require_positive(p.foot_width, "b_f");
  if (!(p.foot_angle > 0.0 && p.foot_angle < std::numbers::pi / 2.0)) {
    throw Error(ErrorKind::ValidationFailed, "lambda",
                "lambda must lie in the open interval (0, pi/2)");
  }
  detail::require_positive(p.bar_spacing, "d");
  detail::require_positive(p.bar_length, "L_B");
  detail::require_positive(p.bar_area, "S_B");
  detail::require_positive(p.workspace_half_edge, "workspace_half_edge");
}

/// Placeholder design used when no machine file is given. These are not the
/// prototype's dimensions. They are chosen so the foot dominates the
/// torsional compliance, about 20x the parallelogram bar compliance.
/// data/default_machine.txt holds the same values.
inline MachineParameters placeholder_parameters() {
  MachineParameters p;
  p.youngs_modulus = 7.0e10;
  p.actuator_stiffness = 1.0e8;
  p.foot_length = 0.15;
  p.foot_height = 0.04;
  p.foot_width = 0.02;
  p.foot_angle = 0.6;
  p.bar_spacing = 0.1;
  p.bar_length = 0.31;
  p.bar_area = 6.0e-4;
  p.workspace_half_edge = 0.1;
  return p;
}

/// Lumped spring constants of one leg. `actuator` is empty for a rigid drive.
struct VirtualJointStiffnesses {
  std::optional<double> actuator;  // N/m
  double foot_force = 0.0;         // N*m/rad, foot bending under the leg force
  double foot_torque = 0.0;        // N*m/rad, foot bending under the leg torque
  double bar = 0.0;                // N*m/rad, differential tension of the parallelogram bars
};

inline VirtualJointStiffnesses virtual_joint_stiffnesses(const MachineParameters& p) {
  VirtualJointStiffnesses k;
  k.actuator = p.actuator_stiffness;
  k.foot_force = 3.0 * p.youngs_modulus * p.foot_inertia_force() / p.foot_length;
  k.foot_torque = 2.0 * p.youngs_modulus * p.foot_inertia_torque() / p.foot_length;
  // Two bars at spacing d carry +-T/d; each stretches by (T/d) L_B / (E S_B)
  // and the relative rotation is 2 delta / d.
  k.bar = p.youngs_modulus * p.bar_area * p.bar_spacing * p.bar_spacing / (2.0 * p.bar_length);
  return k;
}

}  // namespace orthoglide

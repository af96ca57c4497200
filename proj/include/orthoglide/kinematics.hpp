#pragma once

// Leg geometry and leg Jacobians.
//
// Base frame: origin at the isotropic point, rails along +X, +Y, +Z for legs
// 1, 2, 3. For leg i with rail axis u, the two passive revolute joints of the
// R-Pa-R chain are parallel to a = next base axis (leg 1: Y), and the foot lies
// in the plane spanned by u and n = u x a (leg 1: Z).
//
//   slider on the rail at rho * u ---- foot tip F (parallelogram base)
//   foot root R0 = F - L_f (cos(lambda) u + sin(lambda) n)
//   bar vector b = P - F, |b| = L_B
//
// Joint order per leg (1-based, matching the joint-rate vector):
//   1 actuated prismatic           axis u
//   2 virtual, foot bending by F   axis a (normal to the foot plane), at R0
//   3 virtual, foot bending by T   axis g, normal to the foot inside its plane, at R0
//   4 passive revolute             axis a, at F
//   5 parallelogram (5 / 5bis)     axis m = (b x a)/|b x a|, at F and at P
//   6 virtual, bar tension by T    axis m, at P
//   7 passive revolute             axis a, at P
//   8 passive roll                 axis b/|b|, along the bar centre line

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "orthoglide/errors.hpp"
#include "orthoglide/model.hpp"

namespace orthoglide {

using Vector3 = Eigen::Vector3d;
using Matrix68 = Eigen::Matrix<double, 6, 8>;

inline constexpr std::size_t kLegCount = 3;
inline constexpr std::size_t kJointsPerLeg = 8;

struct ToolPose {
  Vector3 position = Vector3::Zero();
};

enum class JointKind {
  ActuatedPrismatic,
  VirtualCompliantRevolute,
  PassiveRevolute,
  ParallelogramPassive,
};

/// Fixed directions of one leg, see the file comment.
struct LegFrame {
  Vector3 rail;       // u
  Vector3 swing;      // a
  Vector3 foot_side;  // n = u x a
};

inline LegFrame leg_frame(int leg_index) {
  const std::size_t i = static_cast<std::size_t>(leg_index - 1);
  LegFrame f;
  f.rail = Vector3::Unit(static_cast<Eigen::Index>(i % 3));
  f.swing = Vector3::Unit(static_cast<Eigen::Index>((i + 1) % 3));
  f.foot_side = f.rail.cross(f.swing);
  return f;
}

struct LegConfiguration {
  int leg_index = 1;
  double rho = 0.0;                  // slider coordinate along the rail, m
  double swing_angle = 0.0;          // joint 4, rad
  double parallelogram_angle = 0.0;  // joint 5 (joint 5bis = -this), rad
  Vector3 platform_point = Vector3::Zero();
  Vector3 foot_root = Vector3::Zero();
  Vector3 foot_tip = Vector3::Zero();
  std::array<Vector3, kJointsPerLeg> axes{};  // e_1..e_8, index 0..7
  std::array<Vector3, kJointsPerLeg> arms{};  // r_j = P - (point on joint j axis); unused for j = 1
  Vector3 axis_5bis = Vector3::Zero();
  Vector3 arm_5bis = Vector3::Zero();
  std::array<JointKind, kJointsPerLeg> kinds{
      JointKind::ActuatedPrismatic,        JointKind::VirtualCompliantRevolute,
      JointKind::VirtualCompliantRevolute, JointKind::PassiveRevolute,
      JointKind::ParallelogramPassive,     JointKind::VirtualCompliantRevolute,
      JointKind::PassiveRevolute,          JointKind::PassiveRevolute};

  Vector3 bar() const { return platform_point - foot_tip; }
};

/// 6x8, rows ordered {angular; linear} to match the twist t = {Omega; V}.
struct LegJacobian {
  Matrix68 matrix = Matrix68::Zero();
};

inline ToolPose isotropic_pose(const MachineParameters&) { return ToolPose{}; }

inline bool workspace_contains(const ToolPose& pose, const MachineParameters& p) {
  return (pose.position - isotropic_pose(p).position).cwiseAbs().maxCoeff() <= p.workspace_half_edge;
}

inline LegConfiguration leg_inverse_kinematics(const ToolPose& pose, int leg_index, const MachineParameters& p) {
  if (leg_index < 1 || leg_index > 3) {
    throw Error(ErrorKind::ValidationFailed, "leg", "leg index must be 1, 2 or 3");
  }
  if (!workspace_contains(pose, p)) {
    throw Error(ErrorKind::OutOfWorkspace, "pose", "tool point lies outside the prescribed workspace");
  }
  const LegFrame frame = leg_frame(leg_index);
  const Vector3& P = pose.position;
  const Vector3& u = frame.rail;
  const Vector3& a = frame.swing;
  const Vector3& n = frame.foot_side;

  const double along = P.dot(u);
  const double transverse_sq = (P - along * u).squaredNorm();
  const double reach_sq = p.bar_length * p.bar_length - transverse_sq;
  if (!(reach_sq > 0.0)) {
    throw Error(ErrorKind::OutOfReach, "pose", "bar length cannot span the transverse offset of leg " +
                                                   std::to_string(leg_index));
  }

  LegConfiguration cfg;
  cfg.leg_index = leg_index;
  // Bar points from the slider toward the workspace, b . u > 0.
  cfg.rho = along - std::sqrt(reach_sq);
  cfg.platform_point = P;
  cfg.foot_tip = cfg.rho * u;
  const double c = std::cos(p.foot_angle);
  const double s = std::sin(p.foot_angle);
  cfg.foot_root = cfg.foot_tip - p.foot_length * (c * u + s * n);

  const Vector3 b = cfg.bar();
  const Vector3 b_hat = b / p.bar_length;
  cfg.parallelogram_angle = std::asin(std::clamp(b_hat.dot(a), -1.0, 1.0));
  cfg.swing_angle = std::atan2(-b_hat.dot(n), b_hat.dot(u));
  const Vector3 m = b.cross(a).normalized();
  const Vector3 g = -s * u + c * n;

  cfg.axes = {u, a, g, a, m, m, a, b_hat};
  cfg.arms = {Vector3::Zero(), P - cfg.foot_root, P - cfg.foot_root, b, b,
              Vector3::Zero(), Vector3::Zero(), Vector3::Zero()};
  cfg.axis_5bis = m;
  cfg.arm_5bis = Vector3::Zero();
  return cfg;
}

/// Platform point recomputed from the slider coordinate and the two passive
/// angles: P = rho u + L_B Rot(a, swing) Rot(n, parallelogram) u.
inline Vector3 reconstruct_platform_point(const LegConfiguration& cfg, const MachineParameters& p) {
  const LegFrame f = leg_frame(cfg.leg_index);
  const Eigen::AngleAxisd swing(cfg.swing_angle, f.swing);
  const Eigen::AngleAxisd tilt(cfg.parallelogram_angle, f.foot_side);
  return cfg.rho * f.rail + p.bar_length * (swing * (tilt * f.rail));
}

inline LegJacobian leg_jacobian(const LegConfiguration& cfg) {
  LegJacobian jac;
  auto& J = jac.matrix;
  for (std::size_t j = 0; j < kJointsPerLeg; ++j) {
    const auto col = static_cast<Eigen::Index>(j);
    const Vector3& e = cfg.axes[j];
    switch (cfg.kinds[j]) {
      case JointKind::ActuatedPrismatic:
        J.col(col) << Vector3::Zero(), e;
        break;
      case JointKind::ParallelogramPassive:
        // theta_5bis = -theta_5: the far link translates without rotating.
        J.col(col) << Vector3::Zero(), e.cross(cfg.arms[j]) - cfg.axis_5bis.cross(cfg.arm_5bis);
        break;
      case JointKind::VirtualCompliantRevolute:
      case JointKind::PassiveRevolute:
        J.col(col) << e, e.cross(cfg.arms[j]);
        break;
    }
  }
  return jac;
}

}  // namespace orthoglide

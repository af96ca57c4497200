#pragma once

// Cartesian compliance of the three-leg structure.
//
//   J theta_dot = R t                     J: 18x24 blockdiag(J_1, J_2, J_3), R = [I6; I6; I6]
//   A theta_dot' = B theta_dot''          passive rates from the two loop closures
//   theta_dot = V theta_dot'              V: 24x12
//   J' = (R^T R)^-1 R^T J V               6x12
//   kappa = J' Kj^-1 J'^T,  K = kappa^-1
//
// theta_dot' holds, leg by leg, the actuated and compliant joints {1, 2, 3, 6};
// theta_dot'' the passive joints {4, 5, 7, 8}.

#include <array>
#include <cmath>
#include <limits>
#include <optional>

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "orthoglide/errors.hpp"
#include "orthoglide/kinematics.hpp"
#include "orthoglide/model.hpp"

namespace orthoglide {

using Matrix6 = Eigen::Matrix<double, 6, 6>;
using Vector6 = Eigen::Matrix<double, 6, 1>;
using Matrix12 = Eigen::Matrix<double, 12, 12>;
using Vector12 = Eigen::Matrix<double, 12, 1>;
using Vector24 = Eigen::Matrix<double, 24, 1>;
using SystemJacobian = Eigen::Matrix<double, 18, 24>;
using StackMatrix = Eigen::Matrix<double, 18, 6>;
using EliminationMatrix = Eigen::Matrix<double, 24, 12>;
using ReducedJacobian = Eigen::Matrix<double, 6, 12>;

inline constexpr double kSingularityCondition = 1e12;

/// Which leg joints (0-based columns of J_i) are compliant and which passive.
/// Compliant order must follow the spring order of A = diag(k_act, k_foot_F,
/// k_foot_T, k_bar).
struct JointLayout {
  std::array<int, 4> compliant{0, 1, 2, 5};
  std::array<int, 4> passive{3, 4, 6, 7};
};

using LegJacobians = std::array<LegJacobian, kLegCount>;

struct AssembledSystem {
  SystemJacobian J = SystemJacobian::Zero();
  StackMatrix R = StackMatrix::Zero();
};

inline AssembledSystem assemble_system(const LegJacobians& legs) {
  AssembledSystem sys;
  for (std::size_t i = 0; i < kLegCount; ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    sys.J.block<6, 8>(6 * k, 8 * k) = legs[i].matrix;
    sys.R.block<6, 6>(6 * k, 0).setIdentity();
  }
  return sys;
}

struct PassiveElimination {
  EliminationMatrix V = EliminationMatrix::Zero();
  Matrix12 A = Matrix12::Zero();
  Matrix12 B = Matrix12::Zero();
  double condition = 0.0;  // 2-norm condition number of B
};

namespace detail {
inline Eigen::Matrix<double, 6, 4> select_columns(const Matrix68& m, const std::array<int, 4>& cols) {
  Eigen::Matrix<double, 6, 4> out;
  for (int c = 0; c < 4; ++c) out.col(c) = m.col(cols[static_cast<std::size_t>(c)]);
  return out;
}
}  // namespace detail

/// Builds A and B from J_1 th_1 = J_2 th_2 and J_1 th_1 = J_3 th_3 and solves
/// th'' = B^-1 A th'. Throws SingularConstraint when cond(B) > 1e12.
inline PassiveElimination eliminate_passive(const LegJacobians& legs, const JointLayout& layout = {}) {
  std::array<Eigen::Matrix<double, 6, 4>, kLegCount> jc, jp;
  for (std::size_t i = 0; i < kLegCount; ++i) {
    jc[i] = detail::select_columns(legs[i].matrix, layout.compliant);
    jp[i] = detail::select_columns(legs[i].matrix, layout.passive);
  }

  PassiveElimination out;
  out.B.block<6, 4>(0, 0) = jp[0];
  out.B.block<6, 4>(0, 4) = -jp[1];
  out.B.block<6, 4>(6, 0) = jp[0];
  out.B.block<6, 4>(6, 8) = -jp[2];
  out.A.block<6, 4>(0, 0) = -jc[0];
  out.A.block<6, 4>(0, 4) = jc[1];
  out.A.block<6, 4>(6, 0) = -jc[0];
  out.A.block<6, 4>(6, 8) = jc[2];

  const Eigen::JacobiSVD<Matrix12> svd(out.B);
  const auto& sv = svd.singularValues();
  out.condition = sv(11) > 0.0 ? sv(0) / sv(11) : std::numeric_limits<double>::infinity();
  if (!(out.condition <= kSingularityCondition)) {
    throw Error(ErrorKind::SingularConstraint, "B",
                "loop-closure constraint matrix is singular (condition " + std::to_string(out.condition) + ")");
  }

  const Matrix12 passive_map = out.B.partialPivLu().solve(out.A);
  for (std::size_t i = 0; i < kLegCount; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const auto local = static_cast<Eigen::Index>(4 * i + j);
      out.V(static_cast<Eigen::Index>(8 * i) + layout.compliant[j], local) = 1.0;
      out.V.row(static_cast<Eigen::Index>(8 * i) + layout.passive[j]) = passive_map.row(local);
    }
  }
  return out;
}

/// J' = (R^T R)^-1 R^T J V.
inline ReducedJacobian reduced_jacobian(const SystemJacobian& J, const StackMatrix& R, const EliminationMatrix& V) {
  const Matrix6 normal = R.transpose() * R;
  return normal.ldlt().solve(R.transpose() * (J * V));
}

/// Diagonal of Kj, leg-major, spring order per leg: k_act, k_foot_F, k_foot_T, k_bar.
/// A rigid actuator is +inf.
inline Vector12 joint_stiffness_diagonal(const MachineParameters& p) {
  const VirtualJointStiffnesses k = virtual_joint_stiffnesses(p);
  const double act = k.actuator.value_or(std::numeric_limits<double>::infinity());
  Vector12 diag;
  for (Eigen::Index i = 0; i < 3; ++i) diag.segment<4>(4 * i) << act, k.foot_force, k.foot_torque, k.bar;
  return diag;
}

inline Matrix12 joint_stiffness_matrix(const MachineParameters& p) {
  return joint_stiffness_diagonal(p).asDiagonal();
}

struct StiffnessResult {
  Matrix6 compliance = Matrix6::Zero();  // kappa, order wx wy wz vx vy vz
  std::optional<Matrix6> stiffness;      // K, absent when kappa is singular
  double condition = 0.0;                // eigenvalue ratio of kappa
};

/// kappa = J' Kj^-1 J'^T; infinite stiffness entries contribute no compliance.
inline StiffnessResult compliance_matrix(const ReducedJacobian& Jp, const Vector12& joint_stiffness) {
  Vector12 joint_compliance;
  for (Eigen::Index i = 0; i < 12; ++i) {
    joint_compliance(i) = std::isinf(joint_stiffness(i)) ? 0.0 : 1.0 / joint_stiffness(i);
  }
  StiffnessResult out;
  out.compliance = Jp * joint_compliance.asDiagonal() * Jp.transpose();

  const Eigen::SelfAdjointEigenSolver<Matrix6> eig(out.compliance, Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  out.condition = ev(0) > 0.0 ? ev(5) / ev(0) : std::numeric_limits<double>::infinity();
  if (out.condition <= kSingularityCondition) {
    const Eigen::LLT<Matrix6> llt(out.compliance);
    if (llt.info() == Eigen::Success) out.stiffness = llt.solve(Matrix6::Identity());
  }
  return out;
}

inline StiffnessResult compliance_matrix(const ReducedJacobian& Jp, const Matrix12& Kj) {
  return compliance_matrix(Jp, Vector12(Kj.diagonal()));
}

/// w = {torque; force}, paired with t = {Omega; V} by w^T t.
struct Wrench {
  Vector3 torque = Vector3::Zero();
  Vector3 force = Vector3::Zero();
};

struct Displacement {
  Vector3 rotation = Vector3::Zero();
  Vector3 translation = Vector3::Zero();
};

inline Displacement apply_wrench(const StiffnessResult& result, const Wrench& w) {
  Vector6 wv;
  wv << w.torque, w.force;
  const Vector6 t = result.compliance * wv;
  return Displacement{t.head<3>(), t.tail<3>()};
}

/// Everything computed for one pose.
struct JointSpaceModel {
  std::array<LegConfiguration, kLegCount> legs;
  LegJacobians leg_jacobians;
  SystemJacobian J = SystemJacobian::Zero();
  StackMatrix R = StackMatrix::Zero();
  EliminationMatrix V = EliminationMatrix::Zero();
  Vector12 joint_stiffness = Vector12::Zero();
  ReducedJacobian Jp = ReducedJacobian::Zero();
  double constraint_condition = 0.0;
};

inline JointSpaceModel build_joint_space_model(const MachineParameters& p, const ToolPose& pose,
                                               const JointLayout& layout = {}) {
  JointSpaceModel model;
  for (std::size_t i = 0; i < kLegCount; ++i) {
    model.legs[i] = leg_inverse_kinematics(pose, static_cast<int>(i) + 1, p);
    model.leg_jacobians[i] = leg_jacobian(model.legs[i]);
  }
  const AssembledSystem sys = assemble_system(model.leg_jacobians);
  model.J = sys.J;
  model.R = sys.R;
  const PassiveElimination elim = eliminate_passive(model.leg_jacobians, layout);
  model.V = elim.V;
  model.constraint_condition = elim.condition;
  model.joint_stiffness = joint_stiffness_diagonal(p);
  model.Jp = reduced_jacobian(model.J, model.R, model.V);
  return model;
}

inline StiffnessResult evaluate_stiffness(const MachineParameters& p, const ToolPose& pose) {
  const JointSpaceModel model = build_joint_space_model(p, pose);
  return compliance_matrix(model.Jp, model.joint_stiffness);
}

/// Closed forms at the isotropic pose; the diagonal of K there is
/// E/2 * torsional (rotations) and E/2 * translational (translations).
struct IsotropicStiffness {
  double torsional = 0.0;      // Ka
  double translational = 0.0;  // Kb
};

inline IsotropicStiffness isotropic_closed_forms(const MachineParameters& p) {
  const double c = std::cos(p.foot_angle);
  const double s = std::sin(p.foot_angle);
  const double hf = p.foot_height;
  const double bf = p.foot_width;
  const double lf = p.foot_length;

  IsotropicStiffness out;
  out.torsional = 1.0 / (p.bar_length / (p.bar_spacing * p.bar_spacing * p.bar_area) +
                         3.0 * lf * c * c / (hf * bf * bf * bf));
  const double actuator_term = p.actuator_stiffness ? p.youngs_modulus / (2.0 * *p.actuator_stiffness) : 0.0;
  // The foot-length ratio enters as L_f^3 sin^2 / (0.5 h_f^3 b_f): stiffness grows as
  // lambda -> 0 and as the foot shortens.
  out.translational = 1.0 / (lf * lf * lf * s * s / (0.5 * hf * hf * hf * bf) + actuator_term);
  return out;
}

}  // namespace orthoglide

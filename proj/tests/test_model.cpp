#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "orthoglide/model.hpp"

using namespace orthoglide;

namespace {

MachineParameters unit_parameters() {
  MachineParameters p;
  p.youngs_modulus = 1.0;
  p.actuator_stiffness = 5.0;
  p.foot_length = 1.0;
  p.foot_height = 1.0;
  p.foot_width = 1.0;
  p.foot_angle = 0.5;
  p.bar_spacing = 1.0;
  p.bar_length = 1.0;
  p.bar_area = 1.0;
  p.workspace_half_edge = 0.1;
  return p;
}

}  // namespace

TEST(VirtualJoints, UnitFootSprings) {
  const auto k = virtual_joint_stiffnesses(unit_parameters());
  EXPECT_DOUBLE_EQ(k.foot_force, 0.25);
  EXPECT_DOUBLE_EQ(k.foot_torque, 1.0 / 6.0);
}

TEST(VirtualJoints, UnitBarSpring) {
  EXPECT_DOUBLE_EQ(virtual_joint_stiffnesses(unit_parameters()).bar, 0.5);
}

TEST(VirtualJoints, ActuatorPassesThrough) {
  auto p = unit_parameters();
  EXPECT_EQ(virtual_joint_stiffnesses(p).actuator, 5.0);
  p.actuator_stiffness.reset();
  EXPECT_FALSE(virtual_joint_stiffnesses(p).actuator.has_value());
}

TEST(VirtualJoints, LinearInYoungsModulus) {
  auto p = placeholder_parameters();
  const auto k1 = virtual_joint_stiffnesses(p);
  p.youngs_modulus *= 2.0;
  const auto k2 = virtual_joint_stiffnesses(p);
  EXPECT_DOUBLE_EQ(k2.foot_force, 2.0 * k1.foot_force);
  EXPECT_DOUBLE_EQ(k2.foot_torque, 2.0 * k1.foot_torque);
  EXPECT_DOUBLE_EQ(k2.bar, 2.0 * k1.bar);
  EXPECT_EQ(k2.actuator, k1.actuator);
}

TEST(VirtualJoints, SectionInertias) {
  auto p = placeholder_parameters();
  EXPECT_DOUBLE_EQ(p.foot_inertia_force(), p.foot_width * std::pow(p.foot_height, 3) / 12.0);
  EXPECT_DOUBLE_EQ(p.foot_inertia_torque(), p.foot_height * std::pow(p.foot_width, 3) / 12.0);
}

// Doubling one dimension at a time: powers of two are exact in binary, so the
// expected ratios are exact too.
TEST(VirtualJoints, Homogeneity) {
  const auto base_p = placeholder_parameters();
  const auto base = virtual_joint_stiffnesses(base_p);

  auto p = base_p;
  p.foot_height *= 2.0;
  auto k = virtual_joint_stiffnesses(p);
  EXPECT_DOUBLE_EQ(k.foot_force / base.foot_force, 8.0);
  EXPECT_DOUBLE_EQ(k.foot_torque / base.foot_torque, 2.0);

  p = base_p;
  p.foot_width *= 2.0;
  k = virtual_joint_stiffnesses(p);
  EXPECT_DOUBLE_EQ(k.foot_force / base.foot_force, 2.0);
  EXPECT_DOUBLE_EQ(k.foot_torque / base.foot_torque, 8.0);

  p = base_p;
  p.foot_length *= 2.0;
  k = virtual_joint_stiffnesses(p);
  EXPECT_DOUBLE_EQ(k.foot_force / base.foot_force, 0.5);
  EXPECT_DOUBLE_EQ(k.foot_torque / base.foot_torque, 0.5);

  p = base_p;
  p.bar_area *= 2.0;
  EXPECT_DOUBLE_EQ(virtual_joint_stiffnesses(p).bar / base.bar, 2.0);
  p = base_p;
  p.bar_spacing *= 2.0;
  EXPECT_DOUBLE_EQ(virtual_joint_stiffnesses(p).bar / base.bar, 4.0);
  p = base_p;
  p.bar_length *= 2.0;
  EXPECT_DOUBLE_EQ(virtual_joint_stiffnesses(p).bar / base.bar, 0.5);
}

TEST(Validation, PlaceholderIsValid) { EXPECT_NO_THROW(validate(placeholder_parameters())); }

TEST(Validation, RejectsLambdaOnBoundary) {
  for (double lambda : {0.0, std::numbers::pi / 2.0, -0.1, 2.0}) {
    auto p = placeholder_parameters();
    p.foot_angle = lambda;
    try {
      validate(p);
      FAIL() << "lambda " << lambda << " accepted";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ValidationFailed);
      EXPECT_EQ(e.subject(), "lambda");
    }
  }
}

TEST(Validation, RejectsNonPositiveDimensions) {
  auto p = placeholder_parameters();
  p.bar_area = 0.0;
  try {
    validate(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.subject(), "S_B");
  }
  p = placeholder_parameters();
  p.actuator_stiffness = -1.0;
  EXPECT_THROW(validate(p), Error);
  p = placeholder_parameters();
  p.youngs_modulus = std::nan("");
  EXPECT_THROW(validate(p), Error);
}

TEST(Validation, RigidActuatorIsValid) {
  auto p = placeholder_parameters();
  p.actuator_stiffness.reset();
  EXPECT_NO_THROW(validate(p));
  EXPECT_TRUE(p.rigid_actuator());
}

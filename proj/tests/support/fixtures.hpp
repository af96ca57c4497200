#pragma once

#include <random>
#include <string>

#include "orthoglide/orthoglide.hpp"

namespace testing_support {

inline std::string default_machine_path() { return std::string(ORTHOGLIDE_DATA_DIR) + "/default_machine.txt"; }

/// Uniform random parameters around the placeholder design, all valid.
inline orthoglide::MachineParameters random_parameters(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> scale(0.6, 1.4);
  std::uniform_real_distribution<double> angle(0.15, 1.3);
  orthoglide::MachineParameters p = orthoglide::placeholder_parameters();
  p.youngs_modulus *= scale(rng);
  p.actuator_stiffness = *p.actuator_stiffness * scale(rng);
  p.foot_length *= scale(rng);
  p.foot_height *= scale(rng);
  p.foot_width *= scale(rng);
  p.foot_angle = angle(rng);
  p.bar_spacing *= scale(rng);
  p.bar_length *= scale(rng);
  p.bar_area *= scale(rng);
  return p;
}

inline orthoglide::ToolPose random_pose(const orthoglide::MachineParameters& p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> c(-p.workspace_half_edge, p.workspace_half_edge);
  return orthoglide::ToolPose{orthoglide::Vector3(c(rng), c(rng), c(rng))};
}

}  // namespace testing_support

#pragma once

// Invariant suites run by `orthoglide check`.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "orthoglide/beam_oracle.hpp"
#include "orthoglide/errors.hpp"
#include "orthoglide/kinematics.hpp"
#include "orthoglide/model.hpp"
#include "orthoglide/stiffness.hpp"

namespace orthoglide {

/// 0-based entries of kappa (upper triangle) that the sparse compliance
/// layout requires to vanish.
inline constexpr std::array<std::pair<int, int>, 9> kCompliancePatternZeros = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 4}, {4, 5}}};

struct SuiteOutcome {
  std::string name;
  bool passed = false;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string note;
};

struct CheckOptions {
  std::size_t poses = 200;
  std::uint64_t seed = 20240611;
};

inline std::vector<ToolPose> random_workspace_poses(const MachineParameters& p, std::size_t count,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-p.workspace_half_edge, p.workspace_half_edge);
  std::vector<ToolPose> poses(count);
  for (auto& pose : poses) pose.position = Vector3(coord(rng), coord(rng), coord(rng));
  return poses;
}

inline double relative_spread(double a, double b, double c) {
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  return (std::max({a, b, c}) - std::min({a, b, c})) / scale;
}

namespace detail {

/// Runs `residual` at every pose and keeps the worst value.
inline SuiteOutcome pose_suite(std::string name, double tolerance, const MachineParameters& p,
                               const std::vector<ToolPose>& poses,
                               const std::function<double(const StiffnessResult&)>& residual) {
  SuiteOutcome out{std::move(name), true, 0.0, tolerance, {}};
  for (const auto& pose : poses) {
    try {
      out.max_residual = std::max(out.max_residual, residual(evaluate_stiffness(p, pose)));
    } catch (const Error& e) {
      out.passed = false;
      out.note = e.what();
      return out;
    }
  }
  out.passed = out.max_residual <= tolerance;
  return out;
}

}  // namespace detail

inline std::vector<SuiteOutcome> run_checks(const MachineParameters& p, const CheckOptions& opt = {}) {
  std::vector<SuiteOutcome> outcomes;
  const auto poses = random_workspace_poses(p, opt.poses, opt.seed);

  outcomes.push_back(detail::pose_suite("symmetry", 1e-10, p, poses, [](const StiffnessResult& r) {
    return (r.compliance - r.compliance.transpose()).norm() / r.compliance.norm();
  }));

  // Residual is 1 - lambda_min / lambda_max; it stays below 1 iff kappa > 0.
  {
    auto pd = detail::pose_suite("positive-definite", 1.0, p, poses, [](const StiffnessResult& r) {
      const Eigen::SelfAdjointEigenSolver<Matrix6> eig(r.compliance, Eigen::EigenvaluesOnly);
      return 1.0 - eig.eigenvalues()(0) / eig.eigenvalues()(5);
    });
    pd.passed = pd.passed && pd.max_residual < 1.0;
    outcomes.push_back(std::move(pd));
  }

  outcomes.push_back(detail::pose_suite("zero-pattern", 1e-9, p, poses, [](const StiffnessResult& r) {
    const double scale = r.compliance.cwiseAbs().maxCoeff();
    double worst = 0.0;
    for (auto [i, j] : kCompliancePatternZeros) worst = std::max(worst, std::abs(r.compliance(i, j)) / scale);
    return worst;
  }));

  outcomes.push_back(detail::pose_suite("rotational-diagonal-equality", 1e-9, p, poses, [](const StiffnessResult& r) {
    return relative_spread(r.compliance(0, 0), r.compliance(1, 1), r.compliance(2, 2));
  }));

  {
    std::vector<ToolPose> diagonal_poses;
    std::mt19937_64 rng(opt.seed + 1);
    std::uniform_real_distribution<double> coord(-p.workspace_half_edge, p.workspace_half_edge);
    for (std::size_t k = 0; k < std::max<std::size_t>(opt.poses / 10, 1); ++k) {
      const double s = coord(rng);
      diagonal_poses.push_back(ToolPose{Vector3(s, s, s)});
    }
    outcomes.push_back(detail::pose_suite(
        "translational-diagonal-equality-xyz", 1e-9, p, diagonal_poses, [](const StiffnessResult& r) {
          return relative_spread(r.compliance(3, 3), r.compliance(4, 4), r.compliance(5, 5));
        }));
  }

  outcomes.push_back(detail::pose_suite("isotropic-diagonality", 1e-8, p, {isotropic_pose(p)},
                                        [](const StiffnessResult& r) {
                                          if (!r.stiffness) return std::numeric_limits<double>::infinity();
                                          const Matrix6& K = *r.stiffness;
                                          const Matrix6 off = K - Matrix6(K.diagonal().asDiagonal());
                                          return off.cwiseAbs().maxCoeff() / K.diagonal().cwiseAbs().maxCoeff();
                                        }));

  outcomes.push_back(detail::pose_suite("isotropic-closed-forms", 1e-6, p, {isotropic_pose(p)},
                                        [&p](const StiffnessResult& r) {
                                          if (!r.stiffness) return std::numeric_limits<double>::infinity();
                                          const IsotropicStiffness cf = isotropic_closed_forms(p);
                                          const double rot = 0.5 * p.youngs_modulus * cf.torsional;
                                          const double trans = 0.5 * p.youngs_modulus * cf.translational;
                                          double worst = 0.0;
                                          for (Eigen::Index i = 0; i < 3; ++i) {
                                            worst = std::max(worst, std::abs((*r.stiffness)(i, i) / rot - 1.0));
                                            worst = std::max(worst,
                                                             std::abs((*r.stiffness)(i + 3, i + 3) / trans - 1.0));
                                          }
                                          return worst;
                                        }));

  {
    SuiteOutcome closure{"loop-closure", true, 0.0, 1e-9, {}};
    std::mt19937_64 rng(opt.seed + 2);
    std::normal_distribution<double> gauss;
    try {
      for (const auto& pose : poses) {
        const JointSpaceModel m = build_joint_space_model(p, pose);
        Vector12 rates;
        for (auto& v : rates) v = gauss(rng);
        const Vector24 full = m.V * rates;
        const Vector6 t1 = m.leg_jacobians[0].matrix * full.segment<8>(0);
        const Vector6 t2 = m.leg_jacobians[1].matrix * full.segment<8>(8);
        const Vector6 t3 = m.leg_jacobians[2].matrix * full.segment<8>(16);
        closure.max_residual = std::max({closure.max_residual, (t1 - t2).norm() / t1.norm(), (t1 - t3).norm() / t1.norm()});
      }
      closure.passed = closure.max_residual <= closure.tolerance;
    } catch (const Error& e) {
      closure.passed = false;
      closure.note = e.what();
    }
    outcomes.push_back(std::move(closure));
  }

  {
    SuiteOutcome beam{"cantilever-oracle", true, 0.0, 5e-3, {}};
    const BeamSpec springs[] = {
        {p.youngs_modulus, p.foot_inertia_force(), p.foot_length, 1000},
        {p.youngs_modulus, p.foot_inertia_torque(), p.foot_length, 1000},
    };
    for (const auto& spec : springs) {
      const double k = cantilever_equivalent_torsional_stiffness(spec, 1.0);
      const double exact = 3.0 * spec.youngs_modulus * spec.inertia / spec.length;
      beam.max_residual = std::max(beam.max_residual, std::abs(k / exact - 1.0));
    }
    beam.passed = beam.max_residual <= beam.tolerance;
    outcomes.push_back(std::move(beam));
  }

  {
    SuiteOutcome bar{"parallelogram-oracle", true, 0.0, 1e-14, {}};
    const double oracle =
        parallelogram_torsion_oracle(p.youngs_modulus, p.bar_area, p.bar_spacing, p.bar_length, 1.0);
    bar.max_residual = std::abs(oracle / virtual_joint_stiffnesses(p).bar - 1.0);
    bar.passed = bar.max_residual <= bar.tolerance;
    outcomes.push_back(std::move(bar));
  }
  return outcomes;
}

}  // namespace orthoglide

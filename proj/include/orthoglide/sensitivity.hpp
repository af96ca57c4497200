#pragma once

// One-at-a-time +-50% sweeps of the design parameters.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orthoglide/errors.hpp"
#include "orthoglide/kinematics.hpp"
#include "orthoglide/model.hpp"
#include "orthoglide/stiffness.hpp"

namespace orthoglide {

enum class DesignParameter {
  FootLength,
  FootHeight,
  FootWidth,
  FootAngle,
  BarSpacing,
  BarLength,
  BarArea,
  ActuatorStiffness,
};

inline constexpr std::array<DesignParameter, 8> kDesignParameters = {
    DesignParameter::FootLength, DesignParameter::FootHeight, DesignParameter::FootWidth,
    DesignParameter::FootAngle,  DesignParameter::BarSpacing, DesignParameter::BarLength,
    DesignParameter::BarArea,    DesignParameter::ActuatorStiffness};

/// Machine-file key of the parameter.
inline std::string_view name_of(DesignParameter param) {
  switch (param) {
    case DesignParameter::FootLength: return "L_f";
    case DesignParameter::FootHeight: return "h_f";
    case DesignParameter::FootWidth: return "b_f";
    case DesignParameter::FootAngle: return "lambda";
    case DesignParameter::BarSpacing: return "d";
    case DesignParameter::BarLength: return "L_B";
    case DesignParameter::BarArea: return "S_B";
    case DesignParameter::ActuatorStiffness: return "k_act";
  }
  return "";
}

inline std::optional<DesignParameter> parse_design_parameter(std::string_view name) {
  for (auto param : kDesignParameters) {
    if (name_of(param) == name) return param;
  }
  return std::nullopt;
}

enum class Metric {
  Ka,                     // torsional closed form
  Kb,                     // translational closed form
  RotationalDiagonal,     // mean of K(0,0), K(1,1), K(2,2) from the full pipeline
  TranslationalDiagonal,  // mean of K(3,3), K(4,4), K(5,5) from the full pipeline
};

inline std::string_view name_of(Metric metric) {
  switch (metric) {
    case Metric::Ka: return "Ka";
    case Metric::Kb: return "Kb";
    case Metric::RotationalDiagonal: return "Krot";
    case Metric::TranslationalDiagonal: return "Ktrans";
  }
  return "";
}

inline std::optional<Metric> parse_metric(std::string_view name) {
  for (auto m : {Metric::Ka, Metric::Kb, Metric::RotationalDiagonal, Metric::TranslationalDiagonal}) {
    if (name_of(m) == name) return m;
  }
  return std::nullopt;
}

/// Current value; throws InvalidSweep for k_act on a rigid actuator.
inline double parameter_value(const MachineParameters& p, DesignParameter param) {
  switch (param) {
    case DesignParameter::FootLength: return p.foot_length;
    case DesignParameter::FootHeight: return p.foot_height;
    case DesignParameter::FootWidth: return p.foot_width;
    case DesignParameter::FootAngle: return p.foot_angle;
    case DesignParameter::BarSpacing: return p.bar_spacing;
    case DesignParameter::BarLength: return p.bar_length;
    case DesignParameter::BarArea: return p.bar_area;
    case DesignParameter::ActuatorStiffness:
      if (!p.actuator_stiffness) {
        throw Error(ErrorKind::InvalidSweep, "k_act", "cannot sweep k_act of a rigid actuator");
      }
      return *p.actuator_stiffness;
  }
  return 0.0;
}

inline MachineParameters with_parameter(MachineParameters p, DesignParameter param, double value) {
  switch (param) {
    case DesignParameter::FootLength: p.foot_length = value; break;
    case DesignParameter::FootHeight: p.foot_height = value; break;
    case DesignParameter::FootWidth: p.foot_width = value; break;
    case DesignParameter::FootAngle: p.foot_angle = value; break;
    case DesignParameter::BarSpacing: p.bar_spacing = value; break;
    case DesignParameter::BarLength: p.bar_length = value; break;
    case DesignParameter::BarArea: p.bar_area = value; break;
    case DesignParameter::ActuatorStiffness: p.actuator_stiffness = value; break;
  }
  return p;
}

inline double evaluate_metric(const MachineParameters& p, Metric metric, const ToolPose& pose = {}) {
  switch (metric) {
    case Metric::Ka: return isotropic_closed_forms(p).torsional;
    case Metric::Kb: return isotropic_closed_forms(p).translational;
    case Metric::RotationalDiagonal:
    case Metric::TranslationalDiagonal: {
      const StiffnessResult r = evaluate_stiffness(p, pose);
      if (!r.stiffness) {
        throw Error(ErrorKind::SingularCompliance, "kappa", "compliance matrix is singular at this pose");
      }
      const Eigen::Index first = metric == Metric::RotationalDiagonal ? 0 : 3;
      return r.stiffness->diagonal().segment<3>(first).mean();
    }
  }
  return 0.0;
}

struct SweepSeries {
  DesignParameter parameter = DesignParameter::FootLength;
  Metric metric = Metric::Ka;
  ToolPose pose;
  std::vector<double> grid;
  std::vector<double> values;
};

inline constexpr std::size_t kDefaultSweepPoints = 21;

/// Grid k = 0..n-1 is nominal * (0.5 + k / (n - 1)), so the endpoints are
/// exactly 0.5x and 1.5x nominal and odd grids contain nominal itself.
inline SweepSeries sweep_parameter(const MachineParameters& p, DesignParameter param, std::size_t n_points,
                                   Metric metric, const ToolPose& pose = {}) {
  if (n_points < 3) throw Error(ErrorKind::InvalidSweep, std::string(name_of(param)), "need at least 3 points");
  const double nominal = parameter_value(p, param);

  SweepSeries series;
  series.parameter = param;
  series.metric = metric;
  series.pose = pose;
  series.grid.resize(n_points);
  series.values.resize(n_points);
  const double steps = static_cast<double>(n_points - 1);
  for (std::size_t k = 0; k < n_points; ++k) {
    series.grid[k] = nominal * (0.5 + static_cast<double>(k) / steps);
  }
  for (std::size_t k = 0; k < n_points; ++k) {
    const MachineParameters varied = with_parameter(p, param, series.grid[k]);
    try {
      validate(varied);
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidSweep, std::string(name_of(param)),
                  "grid value " + std::to_string(series.grid[k]) + " leaves the valid domain (" + e.what() + ")");
    }
    series.values[k] = evaluate_metric(varied, metric, pose);
  }
  return series;
}

struct SensitivityEntry {
  DesignParameter parameter = DesignParameter::FootLength;
  double max_relative_change = 0.0;  // (max - min) / metric(nominal)
};

struct SensitivityReport {
  Metric metric = Metric::Ka;
  std::vector<SensitivityEntry> ranking;  // descending; ties keep parameter order
};

inline SensitivityReport sensitivity_report(const MachineParameters& p, Metric metric,
                                            std::size_t n_points = kDefaultSweepPoints,
                                            const ToolPose& pose = {}) {
  SensitivityReport report;
  report.metric = metric;
  const double nominal = evaluate_metric(p, metric, pose);
  for (auto param : kDesignParameters) {
    const SweepSeries s = sweep_parameter(p, param, n_points, metric, pose);
    const auto [lo, hi] = std::minmax_element(s.values.begin(), s.values.end());
    report.ranking.push_back({param, (*hi - *lo) / nominal});
  }
  std::stable_sort(report.ranking.begin(), report.ranking.end(),
                   [](const SensitivityEntry& a, const SensitivityEntry& b) {
                     return a.max_relative_change > b.max_relative_change;
                   });
  return report;
}

}  // namespace orthoglide

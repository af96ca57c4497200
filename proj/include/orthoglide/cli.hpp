#pragma once

// Command-line front end. Exit codes:
//   0 success, 1 bad input (machine file, flags, sweep domain), 2 pose outside
//   the workspace or out of reach, 3 singular constraint or compliance,
//   4 `check` found a failing suite.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orthoglide/checks.hpp"
#include "orthoglide/errors.hpp"
#include "orthoglide/format.hpp"
#include "orthoglide/machine_file.hpp"
#include "orthoglide/sensitivity.hpp"
#include "orthoglide/stiffness.hpp"

namespace orthoglide::cli {

enum ExitCode : int {
  kOk = 0,
  kBadInput = 1,
  kOutsideWorkspace = 2,
  kSingular = 3,
  kCheckFailed = 4,
};

struct RunConfig {
  std::string machine_file;
  std::string command;
  std::optional<std::string> at;
  std::string param;
  std::string metric = "Ka";
  std::size_t points = kDefaultSweepPoints;
  std::optional<std::string> out_path;
};

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfWorkspace:
    case ErrorKind::OutOfReach: return kOutsideWorkspace;
    case ErrorKind::SingularConstraint:
    case ErrorKind::SingularCompliance: return kSingular;
    default: return kBadInput;
  }
}

inline ToolPose parse_pose(const std::string& text) {
  std::vector<double> xyz;
  std::string_view rest(text);
  while (true) {
    const auto comma = rest.find(',');
    double v = 0.0;
    if (!detail::parse_decimal(detail::trim(rest.substr(0, comma)), v)) {
      throw Error(ErrorKind::ValidationFailed, "--at", "expected --at x,y,z with decimal coordinates");
    }
    xyz.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (xyz.size() != 3) throw Error(ErrorKind::ValidationFailed, "--at", "expected exactly three coordinates");
  return ToolPose{Vector3(xyz[0], xyz[1], xyz[2])};
}

inline std::string render_matrix_block(std::string_view title, const Matrix6& m) {
  std::string s = "# ";
  s.append(title).append("\n# order: wx,wy,wz,vx,vy,vz\n");
  s += format_csv_rows(m);
  return s;
}

inline std::string render_sweep_csv(const SweepSeries& series) {
  std::string s = "param_value,metric\n";
  for (std::size_t k = 0; k < series.grid.size(); ++k) {
    s += format_number(series.grid[k]);
    s.push_back(',');
    s += format_number(series.values[k]);
    s.push_back('\n');
  }
  return s;
}

inline std::string render_report_csv(const SensitivityReport& report) {
  std::string s = "param,max_relative_change\n";
  for (const auto& entry : report.ranking) {
    s.append(name_of(entry.parameter)).push_back(',');
    s += format_number(entry.max_relative_change);
    s.push_back('\n');
  }
  return s;
}

namespace detail {

inline ToolPose pose_of(const RunConfig& cfg, const MachineParameters& p) {
  return cfg.at ? parse_pose(*cfg.at) : isotropic_pose(p);
}

inline Metric metric_of(const RunConfig& cfg) {
  const auto m = parse_metric(cfg.metric);
  if (!m) throw Error(ErrorKind::ValidationFailed, "--metric", "metric must be Ka, Kb, Krot or Ktrans");
  return *m;
}

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.out_path) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.out_path, std::ios::binary);
  if (!file) throw Error(ErrorKind::Io, *cfg.out_path, "cannot write '" + *cfg.out_path + "'");
  file << text;
}

}  // namespace detail

inline int cmd_stiffness(const RunConfig& cfg, const MachineParameters& p, std::ostream& out, std::ostream& err) {
  const ToolPose pose = detail::pose_of(cfg, p);
  if (!workspace_contains(pose, p)) {
    err << "error: pose lies outside the workspace (half edge " << format_number(p.workspace_half_edge) << " m)\n";
    return kOutsideWorkspace;
  }
  const StiffnessResult r = evaluate_stiffness(p, pose);
  std::string text = render_matrix_block("kappa", r.compliance);
  if (!r.stiffness) {
    detail::emit(cfg, text, out);
    err << "error: compliance matrix is singular (condition " << format_number(r.condition) << ")\n";
    return kSingular;
  }
  text += render_matrix_block("K", *r.stiffness);
  detail::emit(cfg, text, out);
  return kOk;
}

inline int cmd_sweep(const RunConfig& cfg, const MachineParameters& p, std::ostream& out, std::ostream&) {
  const auto param = parse_design_parameter(cfg.param);
  if (!param) throw Error(ErrorKind::ValidationFailed, "--param", "unknown design parameter '" + cfg.param + "'");
  const SweepSeries s = sweep_parameter(p, *param, cfg.points, detail::metric_of(cfg), detail::pose_of(cfg, p));
  detail::emit(cfg, render_sweep_csv(s), out);
  return kOk;
}

inline int cmd_report(const RunConfig& cfg, const MachineParameters& p, std::ostream& out, std::ostream&) {
  const SensitivityReport r = sensitivity_report(p, detail::metric_of(cfg), cfg.points, detail::pose_of(cfg, p));
  detail::emit(cfg, render_report_csv(r), out);
  return kOk;
}

inline int cmd_check(const RunConfig& cfg, const MachineParameters& p, std::ostream& out, std::ostream& err) {
  const auto outcomes = run_checks(p);
  std::string text;
  const SuiteOutcome* first_failure = nullptr;
  for (const auto& o : outcomes) {
    text += o.passed ? "PASS " : "FAIL ";
    text += o.name + " max_residual=" + format_number(o.max_residual) + " tolerance=" + format_number(o.tolerance);
    if (!o.note.empty()) text += " (" + o.note + ")";
    text.push_back('\n');
    if (!o.passed && !first_failure) first_failure = &o;
  }
  detail::emit(cfg, text, out);
  if (first_failure) {
    err << "check failed: " << first_failure->name << '\n';
    return kCheckFailed;
  }
  return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Lumped-parameter stiffness analysis of a three-axis orthogonal parallel machine"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--machine", cfg.machine_file, "machine description file")->required();
    sub->add_option("--out", cfg.out_path, "write output to this file instead of stdout");
  };
  auto add_pose = [&cfg](CLI::App* sub) {
    sub->add_option("--at", cfg.at, "tool point x,y,z in metres (default: isotropic point)");
  };

  auto* stiffness = app.add_subcommand("stiffness", "print compliance and stiffness matrices at a pose");
  add_common(stiffness);
  add_pose(stiffness);

  auto* sweep = app.add_subcommand("sweep", "+-50% sweep of one design parameter");
  add_common(sweep);
  add_pose(sweep);
  sweep->add_option("--param", cfg.param, "L_f, h_f, b_f, lambda, d, L_B, S_B or k_act")->required();
  sweep->add_option("--metric", cfg.metric, "Ka, Kb, Krot or Ktrans");
  sweep->add_option("--points", cfg.points, "grid points (>= 3)");

  auto* report = app.add_subcommand("report", "rank design parameters by sweep sensitivity");
  add_common(report);
  add_pose(report);
  report->add_option("--metric", cfg.metric, "Ka, Kb, Krot or Ktrans");
  report->add_option("--points", cfg.points, "grid points per parameter (>= 3)");

  auto* check = app.add_subcommand("check", "run the invariant and oracle suites");
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    const MachineParameters p = load_machine_file(cfg.machine_file);
    if (cfg.command == "stiffness") return cmd_stiffness(cfg, p, out, err);
    if (cfg.command == "sweep") return cmd_sweep(cfg, p, out, err);
    if (cfg.command == "report") return cmd_report(cfg, p, out, err);
    return cmd_check(cfg, p, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace orthoglide::cli

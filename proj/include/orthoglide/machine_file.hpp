#pragma once

// Line-oriented machine description:
//
//   # comment
//   E = 7.0e10
//   k_act = rigid        (or a number)
//   ...
//
// All ten keys are required exactly once; values are SI decimals.

#include <array>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "orthoglide/errors.hpp"
#include "orthoglide/format.hpp"
#include "orthoglide/model.hpp"

namespace orthoglide {

inline constexpr std::array<std::string_view, 10> kMachineFileKeys = {
    "E", "k_act", "L_f", "h_f", "b_f", "lambda", "d", "L_B", "S_B", "workspace_half_edge"};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

inline bool parse_decimal(std::string_view text, double& out) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out, std::chars_format::general);
  return ec == std::errc{} && ptr == end;
}

inline void assign_field(MachineParameters& p, std::string_view key, double value) {
  if (key == "E") p.youngs_modulus = value;
  else if (key == "k_act") p.actuator_stiffness = value;
  else if (key == "L_f") p.foot_length = value;
  else if (key == "h_f") p.foot_height = value;
  else if (key == "b_f") p.foot_width = value;
  else if (key == "lambda") p.foot_angle = value;
  else if (key == "d") p.bar_spacing = value;
  else if (key == "L_B") p.bar_length = value;
  else if (key == "S_B") p.bar_area = value;
  else if (key == "workspace_half_edge") p.workspace_half_edge = value;
}

inline bool is_known_key(std::string_view key) {
  for (auto k : kMachineFileKeys) {
    if (k == key) return true;
  }
  return false;
}

}  // namespace detail

inline MachineParameters parse_machine_file(std::string_view text) {
  MachineParameters p;
  std::map<std::string, std::size_t, std::less<>> seen;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::MalformedLine, "", "line " + std::to_string(line_no) + ": expected 'key = value'",
                  line_no);
    }
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));
    if (!detail::is_known_key(key)) {
      throw Error(ErrorKind::MalformedLine, std::string(key),
                  "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'", line_no);
    }
    if (auto it = seen.find(key); it != seen.end()) {
      throw Error(ErrorKind::DuplicateKey, std::string(key),
                  "key '" + std::string(key) + "' appears on lines " + std::to_string(it->second) + " and " +
                      std::to_string(line_no),
                  line_no);
    }
    seen.emplace(std::string(key), line_no);

    if (key == "k_act" && value == "rigid") {
      p.actuator_stiffness.reset();
      continue;
    }
    double number = 0.0;
    if (!detail::parse_decimal(value, number)) {
      throw Error(ErrorKind::MalformedLine, std::string(key),
                  "line " + std::to_string(line_no) + ": '" + std::string(value) + "' is not a decimal number",
                  line_no);
    }
    detail::assign_field(p, key, number);
  }

  for (auto key : kMachineFileKeys) {
    if (!seen.contains(key)) {
      throw Error(ErrorKind::MissingKey, std::string(key), "required key '" + std::string(key) + "' is missing");
    }
  }
  validate(p);
  return p;
}

/// Canonical rendering; parse_machine_file(render_machine_file(p)) == p.
inline std::string render_machine_file(const MachineParameters& p) {
  std::string out;
  auto line = [&out](std::string_view key, double v) {
    out.append(key).append(" = ").append(format_number(v)).push_back('\n');
  };
  line("E", p.youngs_modulus);
  if (p.actuator_stiffness) line("k_act", *p.actuator_stiffness);
  else out.append("k_act = rigid\n");
  line("L_f", p.foot_length);
  line("h_f", p.foot_height);
  line("b_f", p.foot_width);
  line("lambda", p.foot_angle);
  line("d", p.bar_spacing);
  line("L_B", p.bar_length);
  line("S_B", p.bar_area);
  line("workspace_half_edge", p.workspace_half_edge);
  return out;
}

inline MachineParameters load_machine_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, path, "cannot open machine file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_machine_file(buffer.str());
}

}  // namespace orthoglide

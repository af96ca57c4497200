#pragma once

#include <charconv>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace orthoglide {

/// 17 significant digits, '.' separator, independent of the global locale.
inline std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

template <typename Derived>
std::string format_csv_rows(const Eigen::MatrixBase<Derived>& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out.push_back(',');
      out += format_number(m(r, c));
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace orthoglide

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace orthoglide {

enum class ErrorKind {
  MissingKey,
  DuplicateKey,
  MalformedLine,
  ValidationFailed,
  OutOfWorkspace,
  OutOfReach,
  SingularConstraint,
  SingularCompliance,
  InvalidSweep,
  Io,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingKey: return "MissingKey";
    case ErrorKind::DuplicateKey: return "DuplicateKey";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::OutOfWorkspace: return "OutOfWorkspace";
    case ErrorKind::OutOfReach: return "OutOfReach";
    case ErrorKind::SingularConstraint: return "SingularConstraint";
    case ErrorKind::SingularCompliance: return "SingularCompliance";
    case ErrorKind::InvalidSweep: return "InvalidSweep";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

/// Every failure the library reports. `subject` carries the offending key,
/// field or parameter name when there is one; `line` is 1-based and only set
/// for machine-file errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string subject, const std::string& message, std::size_t line = 0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        subject_(std::move(subject)),
        line_(line) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& subject() const noexcept { return subject_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::string subject_;
  std::size_t line_;
};

}  // namespace orthoglide

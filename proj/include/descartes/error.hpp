#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace descartes {

enum class ErrorKind {
  ParseError,
  DegenerateInput,
  NonIntegralVertices,
  NegativeOrientation,
  ComplexSolutions,
  CurlViolation,
  NonIntegral,
  NotTangent,
  ZeroRadius,
  NonPositiveCurvature,
  NoConsistentPlacement,
  ZeroCurvature,
  CollinearTangencyPoints,
  IoError,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Domain failure raised by every module. The CLI maps it to exit code 1 and
/// prints error_name(kind()) on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace descartes

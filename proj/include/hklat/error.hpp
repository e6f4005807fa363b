#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hklat {

enum class ErrorKind {
  kShape,
  kParameter,
  kDomain,
  kDegenerate,
  kSignature,
  kPrecondition,
  kNotPositive,        // reference class has q <= 0
  kNotAWall,
  kWallNotPositive,    // wall with (d, h) <= 0
  kWrongComponent,
  kNotIsotropic,
  kNoIsotropicClasses,
  kNotStabilized,
  kDegree,
  kParse,
  kInternal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is the machine-readable tag,
/// `what()` is "<tag>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kShape: return "shape";
    case ErrorKind::kParameter: return "parameter";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kDegenerate: return "degenerate";
    case ErrorKind::kSignature: return "signature";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kNotPositive: return "reference class not positive";
    case ErrorKind::kNotAWall: return "not a wall";
    case ErrorKind::kWallNotPositive: return "wall not h-positive";
    case ErrorKind::kWrongComponent: return "wrong component";
    case ErrorKind::kNotIsotropic: return "not isotropic";
    case ErrorKind::kNoIsotropicClasses: return "no rational isotropic classes";
    case ErrorKind::kNotStabilized: return "span did not stabilize";
    case ErrorKind::kDegree: return "degree";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace hklat

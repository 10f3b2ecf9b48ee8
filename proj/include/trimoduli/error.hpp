#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trimoduli {

enum class ErrorCode {
  NonPositiveSide,
  DegenerateTriangle,
  NonPositiveAngle,
  AngleSumMismatch,
  OutOfRegion,
  OutOfSigma,
  OutOfRange,
  InvalidSpec,
  InvalidArguments,
  IoError,
};

constexpr std::string_view name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveSide: return "NonPositiveSide";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::NonPositiveAngle: return "NonPositiveAngle";
    case ErrorCode::AngleSumMismatch: return "AngleSumMismatch";
    case ErrorCode::OutOfRegion: return "OutOfRegion";
    case ErrorCode::OutOfSigma: return "OutOfSigma";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidArguments: return "InvalidArguments";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace trimoduli

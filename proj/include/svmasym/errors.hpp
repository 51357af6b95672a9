#pragma once

#include <stdexcept>
#include <string>

namespace svmasym {

enum class ErrorCode {
  InvalidArgument,
  NoSignChange,
  MaxIter,
  NoConvergence,
  DegenerateSplit,
  ZeroWeight,
  AllInfeasible,
  Io,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::MaxIter: return "MaxIter";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateSplit: return "DegenerateSplit";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::AllInfeasible: return "AllInfeasible";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace svmasym

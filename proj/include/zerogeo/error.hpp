#pragma once

#include <stdexcept>
#include <string>

namespace zerogeo {

enum class ErrorCode {
  DegreeMismatch,
  OutOfRange,
  NotSymmetric,
  NoConvergence,
  NotOnCircle,
  PhaseCollision,
  PhaseMismatch,
  InternalInconsistency,
  HypothesisViolated,
  BadParams,
  PositivityLost,
  OutOfDomain,
  SamplerExhausted,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace zerogeo

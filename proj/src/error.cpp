#include "zerogeo/error.hpp"

namespace zerogeo {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotOnCircle: return "NotOnCircle";
    case ErrorCode::PhaseCollision: return "PhaseCollision";
    case ErrorCode::PhaseMismatch: return "PhaseMismatch";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::PositivityLost: return "PositivityLost";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::SamplerExhausted: return "SamplerExhausted";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace zerogeo

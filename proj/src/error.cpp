#include "bfree/error.hpp"

namespace bfree {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::NotOdd: return "NotOdd";
    case ErrorKind::NotGreaterThanOne: return "NotGreaterThanOne";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::DepthInsufficient: return "DepthInsufficient";
    case ErrorKind::DepthMismatch: return "DepthMismatch";
    case ErrorKind::WindowTooShort: return "WindowTooShort";
    case ErrorKind::ComplexityRefusal: return "ComplexityRefusal";
    case ErrorKind::InconsistentLevels: return "InconsistentLevels";
  }
  return "Unknown";
}

}  // namespace bfree

#include "mopf/error.hpp"

namespace mopf {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Cycle: return "CycleError";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::ExtremalNotMarked: return "ExtremalNotMarked";
    case ErrorKind::MarkingNotMonotone: return "MarkingNotMonotone";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Unbounded: return "UnboundedError";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::Shape: return "ShapeError";
  }
  return "Error";
}

}  // namespace mopf

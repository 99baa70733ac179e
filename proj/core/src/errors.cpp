#include "wallcross/errors.hpp"

namespace wallcross {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotMinusOneClass: return "NotMinusOneClass";
    case ErrorKind::W2NotPreserved: return "W2NotPreserved";
    case ErrorKind::NotOdd: return "NotOdd";
    case ErrorKind::OutsideDisk: return "OutsideDisk";
    case ErrorKind::OnWall: return "OnWall";
    case ErrorKind::NonGenericPoint: return "NonGenericPoint";
    case ErrorKind::NotForwardSheet: return "NotForwardSheet";
    case ErrorKind::DegenerateSegment: return "DegenerateSegment";
    case ErrorKind::MissingSymbol: return "MissingSymbol";
    case ErrorKind::OddBPlus: return "OddBPlus";
    case ErrorKind::RohlinViolation: return "RohlinViolation";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

} // namespace wallcross

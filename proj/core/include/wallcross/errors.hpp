#ifndef WALLCROSS_ERRORS_HPP_
#define WALLCROSS_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace wallcross {

enum class ErrorKind {
  NotMinusOneClass,
  W2NotPreserved,
  NotOdd,
  OutsideDisk,
  OnWall,
  NonGenericPoint,
  NotForwardSheet,
  DegenerateSegment,
  MissingSymbol,
  OddBPlus,
  RohlinViolation,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so the
// CLI can map it to a stable message and exit code.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const noexcept { return kind_; }
private:
  ErrorKind kind_;
};

} // namespace wallcross

#endif

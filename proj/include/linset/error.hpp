#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linset {

enum class ErrorKind {
  NonPrimeP,
  ReducibleModulus,
  BudgetExceeded,
  BadSubfield,
  ZeroScalar,
  NotAGraph,
  WrongRank,
  MaxFieldTooLarge,
  PointAtInfinity,
  WrongN,
  DegeneratePoly,
  BadParams,
  CenterMeetsSubgeometry,
  CenterMeetsAxis,
  BadAffinePoint,
  ParseError,
  IoError,
  InternalConsistency,
};

std::string_view to_string(ErrorKind kind);

// Every failure surfaced by the library carries one of the kinds above so that
// callers (and the CLI exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace linset

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tracefree {

enum class ErrorKind {
  MalformedInput,
  IndexOutOfRange,
  ArcDegreeViolation,
  InconsistentStrands,
  NonSquare,
  UnboundVariable,
  ForeignVariable,
  ResourceLimit,
  NotZeroDimensional,
  OddParity,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class NotZeroDimensionalError : public Error {
 public:
  explicit NotZeroDimensionalError(int dimension)
      : Error(ErrorKind::NotZeroDimensional,
              "ideal has dimension " + std::to_string(dimension)),
        dimension_(dimension) {}

  int dimension() const noexcept { return dimension_; }

 private:
  int dimension_;
};

}  // namespace tracefree

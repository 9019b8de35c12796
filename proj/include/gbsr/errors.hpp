#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gbsr {

// Every domain failure carries one of these codes; the CLI prints the name.
enum class ErrorCode {
  EmptyGraph,
  Disconnected,
  NonPositiveLabel,
  DuplicateName,
  UnknownVertex,
  UnknownEdge,
  SyntaxError,
  UnknownGenerator,
  LabelOverflow,
  NotCollapsible,
  NotDivisible,
  WrongOrigin,
  SameEdge,
  DifferentOrigin,
  NotAscending,
  NotDivisor,
  NotReduced,
  AscendingCase,
  BoundsTooTight,
  NoViolation,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace gbsr

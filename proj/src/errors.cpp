#include "gbsr/errors.hpp"

namespace gbsr {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonPositiveLabel: return "NonPositiveLabel";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::LabelOverflow: return "LabelOverflow";
    case ErrorCode::NotCollapsible: return "NotCollapsible";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::WrongOrigin: return "WrongOrigin";
    case ErrorCode::SameEdge: return "SameEdge";
    case ErrorCode::DifferentOrigin: return "DifferentOrigin";
    case ErrorCode::NotAscending: return "NotAscending";
    case ErrorCode::NotDivisor: return "NotDivisor";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::AscendingCase: return "AscendingCase";
    case ErrorCode::BoundsTooTight: return "BoundsTooTight";
    case ErrorCode::NoViolation: return "NoViolation";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace gbsr

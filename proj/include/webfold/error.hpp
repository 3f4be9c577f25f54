#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace webfold {

enum class ErrorCode {
  NotACorner,
  OutOfRange,
  NotRectangular,
  InvalidTableau,
  NonLatticeWord,
  WrongShape,
  NotSymmetrical,
  NotDomino,
  InvalidDiagram,
  InvalidBoundaryDegrees,
  ConcurrentArcs,
  UnknownFace,
  NotAWeb,
  UnrecognizedBlock,
  VerticalPairNotAnArc,
  UnknownTheorem,
  ParseError,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotACorner: return "NotACorner";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotRectangular: return "NotRectangular";
    case ErrorCode::InvalidTableau: return "InvalidTableau";
    case ErrorCode::NonLatticeWord: return "NonLatticeWord";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::NotSymmetrical: return "NotSymmetrical";
    case ErrorCode::NotDomino: return "NotDomino";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::InvalidBoundaryDegrees: return "InvalidBoundaryDegrees";
    case ErrorCode::ConcurrentArcs: return "ConcurrentArcs";
    case ErrorCode::UnknownFace: return "UnknownFace";
    case ErrorCode::NotAWeb: return "NotAWeb";
    case ErrorCode::UnrecognizedBlock: return "UnrecognizedBlock";
    case ErrorCode::VerticalPairNotAnArc: return "VerticalPairNotAnArc";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every domain failure in the library is reported through this type; the
/// code identifies the failure class and what() carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace webfold

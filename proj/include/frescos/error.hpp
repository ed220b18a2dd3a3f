#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frescos {

/// Every failure the engine can report. The names are part of the CLI
/// output contract, so keep `error_name` in sync.
enum class ErrorKind {
  InversionOfNonUnit,
  CoefficientBeyondOrder,
  ResonantObstruction,
  OrderUnderflow,
  NonMonicDivisor,
  NotGeometric,
  NonUnitSeries,
  MixedPrimitiveClasses,
  NotAGenerator,
  IndexOutOfRange,
  WrongRank,
  NotPrimitive,
  NotPrincipal,
  NotInF0,
  PValueZero,
  AlphaZero,
  TruncationTooSmall,
  NotMonogenicAtTruncation,
  DegenerateTruncation,
  SyntaxError,
  SemanticError,
  InvalidArgument,
};

inline std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InversionOfNonUnit: return "InversionOfNonUnit";
    case ErrorKind::CoefficientBeyondOrder: return "CoefficientBeyondOrder";
    case ErrorKind::ResonantObstruction: return "ResonantObstruction";
    case ErrorKind::OrderUnderflow: return "OrderUnderflow";
    case ErrorKind::NonMonicDivisor: return "NonMonicDivisor";
    case ErrorKind::NotGeometric: return "NotGeometric";
    case ErrorKind::NonUnitSeries: return "NonUnitSeries";
    case ErrorKind::MixedPrimitiveClasses: return "MixedPrimitiveClasses";
    case ErrorKind::NotAGenerator: return "NotAGenerator";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::WrongRank: return "WrongRank";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NotPrincipal: return "NotPrincipal";
    case ErrorKind::NotInF0: return "NotInF0";
    case ErrorKind::PValueZero: return "PValueZero";
    case ErrorKind::AlphaZero: return "AlphaZero";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::NotMonogenicAtTruncation: return "NotMonogenicAtTruncation";
    case ErrorKind::DegenerateTruncation: return "DegenerateTruncation";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SemanticError: return "SemanticError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

/// Parse failures carry a 1-based source location.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, int line, int column)
      : Error(ErrorKind::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace frescos

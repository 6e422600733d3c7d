#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kstate {

/// Failure categories surfaced by the library. Each maps to a documented
/// error condition of the operation that throws it.
enum class ErrorKind {
  SyntaxError,
  BadLabels,
  NonPlanar,
  OrientationConflict,
  EmptyDiagram,
  Disconnected,
  LengthMismatch,
  BadCharacter,
  NotAdjacent,
  NotDecomposing,
  NotBipartite,
  MixedLabels,
  CutVertex,
  NotSquare,
  NotAKnot,
  NotAlternatingDiagram,
  NotReduced,
  BoundExceeded,
  CsvError,
  Internal,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::BadLabels: return "BadLabels";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::OrientationConflict: return "OrientationConflict";
    case ErrorKind::EmptyDiagram: return "EmptyDiagram";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::BadCharacter: return "BadCharacter";
    case ErrorKind::NotAdjacent: return "NotAdjacent";
    case ErrorKind::NotDecomposing: return "NotDecomposing";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::MixedLabels: return "MixedLabels";
    case ErrorKind::CutVertex: return "CutVertex";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotAKnot: return "NotAKnot";
    case ErrorKind::NotAlternatingDiagram: return "NotAlternatingDiagram";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::CsvError: return "CsvError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Internal";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

} // namespace kstate

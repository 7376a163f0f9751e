#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oml {

enum class ErrorKind {
  NotALattice,
  NoBounds,
  Degenerate,
  BadInvolution,
  NotOrthomodular,
  NotAtomistic,
  ImproperFilter,
  NotSeparable,
  DomainMismatch,
  ZeroDesignated,
  InvalidHypergraph,
  BlocksOverlapTooMuch,
  NotOrthomodularAfterPaste,
  SyntaxError,
  SemanticError,
  UnknownFixture,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBounds: return "NoBounds";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::BadInvolution: return "BadInvolution";
    case ErrorKind::NotOrthomodular: return "NotOrthomodular";
    case ErrorKind::NotAtomistic: return "NotAtomistic";
    case ErrorKind::ImproperFilter: return "ImproperFilter";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::ZeroDesignated: return "ZeroDesignated";
    case ErrorKind::InvalidHypergraph: return "InvalidHypergraph";
    case ErrorKind::BlocksOverlapTooMuch: return "BlocksOverlapTooMuch";
    case ErrorKind::NotOrthomodularAfterPaste: return "NotOrthomodularAfterPaste";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SemanticError: return "SemanticError";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures keep the 1-based position of the offending token.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
      : Error(kind, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        detail_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace oml

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace alphag {

enum class ErrorKind {
  not_closed,
  no_identity,
  no_inverse,
  not_associative,
  not_latin,
  not_central,
  not_a_subgroup,
  not_central_involution,
  size_limit_exceeded,
  invalid_argument,
  parse_error,
  spec_syntax_error,
  unknown_family,
  bad_parameter,
  io_error,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::not_closed: return "NotClosed";
    case ErrorKind::no_identity: return "NoIdentity";
    case ErrorKind::no_inverse: return "NoInverse";
    case ErrorKind::not_associative: return "NotAssociative";
    case ErrorKind::not_latin: return "NotLatinSquare";
    case ErrorKind::not_central: return "NotCentral";
    case ErrorKind::not_a_subgroup: return "NotASubgroup";
    case ErrorKind::not_central_involution: return "NotCentralInvolution";
    case ErrorKind::size_limit_exceeded: return "SizeLimitExceeded";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::spec_syntax_error: return "SpecSyntaxError";
    case ErrorKind::unknown_family: return "UnknownFamily";
    case ErrorKind::bad_parameter: return "BadParameter";
    case ErrorKind::io_error: return "IOError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `witness` carries the element ids
/// (or, for parse errors, line/column or character position) that
/// demonstrate the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::int64_t> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::int64_t> witness_;
};

}  // namespace alphag

#pragma once

#include <stdexcept>
#include <string>

namespace selflink {

/// Error categories. The numeric values double as CLI exit codes.
enum class ErrorCode : int {
  Usage = 2,
  InvalidInput = 3,
  Precondition = 4,
  InvariantBreach = 5,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Usage: return "usage";
    case ErrorCode::InvalidInput: return "invalid_input";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::InvariantBreach: return "invariant_breach";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed text, JSON, or structurally invalid objects.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorCode::InvalidInput, what) {}
};

/// Well-formed input that violates a mathematical precondition
/// (ring mismatch, out-of-bounds size, edge not in tree, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorCode::Precondition, what) {}
};

/// An internal invariant failed. Seeing one of these means a bug.
class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what) : Error(ErrorCode::InvariantBreach, what) {}
};

}  // namespace selflink

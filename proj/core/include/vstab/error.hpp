#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vstab {

// Stable error categories. The CLI prints code_name() verbatim, so the
// strings are part of the external interface.
enum class ErrorCode {
  domain,            // argument outside the mathematical domain of an op
  validation,        // table or set violates a structural invariant
  precondition,      // op-specific precondition (e.g. g does not fix s)
  no_homeomorphism,  // clopen sets of different type
  not_isomorphic,    // |S| != |S'|
  parse,             // malformed text or JSON
  internal,          // a theorem-backed assertion failed: a bug
};

std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// Checks a theorem-backed invariant; failure means a bug in this library.
inline void ensure(bool condition, const char* what) {
  if (!condition) {
    throw Error(ErrorCode::internal, std::string("internal invariant failed: ") + what);
  }
}

}  // namespace vstab

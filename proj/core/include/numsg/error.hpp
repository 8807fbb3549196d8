#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace numsg {

/// Domain error categories. Every precondition violation raised by the
/// library carries one of these.
enum class ErrorCode {
  EmptyInput,
  GcdNotOne,
  NotAMember,
  WholeLine,
  Overflow,
  EmptyInterval,
  ProportionTooLarge,
  BadParameters,
  NoDelta,
  SymmetricInput,
  NotThreeGenerated,
  InvalidGluing,
  CapExceeded,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when two routes that must agree (a closed form and a direct
/// computation) disagree. Never expected in a correct build.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

inline void ensure(bool cond, const char* what) {
  if (!cond) throw InconsistencyError(what);
}

}  // namespace detail
}  // namespace numsg

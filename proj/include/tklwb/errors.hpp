#pragma once

#include <stdexcept>
#include <string>

namespace tklwb {

enum class ErrorKind {
  invalid_generator,
  parse,
  arithmetic_overflow,
  not_q_polynomial,
  parity_violation,
  domain,
  order,
  internal_inconsistency,
  resource_limit,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers switch on kind() when they
// need to map failures onto exit codes or report entries.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace tklwb

#include "tklwb/errors.hpp"

namespace tklwb {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_generator: return "invalid-generator";
    case ErrorKind::parse: return "parse";
    case ErrorKind::arithmetic_overflow: return "arithmetic-overflow";
    case ErrorKind::not_q_polynomial: return "not-a-q-polynomial";
    case ErrorKind::parity_violation: return "parity-violation";
    case ErrorKind::domain: return "domain";
    case ErrorKind::order: return "order";
    case ErrorKind::internal_inconsistency: return "internal-inconsistency";
    case ErrorKind::resource_limit: return "resource-limit";
  }
  return "unknown";
}

}  // namespace tklwb

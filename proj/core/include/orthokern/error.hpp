#pragma once

#include <stdexcept>
#include <string>

namespace orthokern {

/// Raised when an argument violates a mathematical precondition (parameter
/// range, point outside the domain, insufficient quadrature order). The
/// message states the violated condition.
class DomainError : public std::domain_error {
public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& why) {
  throw DomainError(where + ": " + why);
}

inline void require(bool ok, const char* where, const std::string& why) {
  if (!ok) fail(where, why);
}

}  // namespace detail
}  // namespace orthokern

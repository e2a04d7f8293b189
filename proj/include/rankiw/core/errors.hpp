#pragma once

#include <stdexcept>
#include <string>

namespace rankiw {

// Caller handed us something outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A valid request the library deliberately does not implement (U_N, complex characters, ...).
class UnsupportedError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A computation cap (precision, Hecke bound) was exceeded.
class CapError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An internal invariant failed. Always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A certified comparison landed inside the guard band.
class UncertifiedComparison : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require_domain(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

inline void require_internal(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace rankiw

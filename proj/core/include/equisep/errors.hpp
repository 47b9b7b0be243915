#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace equisep {

/// Base class of all equisep errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A text or JSON document could not be parsed (bad edge list, bad spec).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value violates a structural invariant or an argument is out of range.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis does not hold for the given inputs, so the
/// corresponding guarantee is refused rather than silently unverified.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A measured result contradicts a guarantee that should always hold.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic overflowed 64 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in index arithmetic");
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in index arithmetic");
  }
  return out;
}

}  // namespace equisep

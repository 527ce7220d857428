#pragma once

#include <stdexcept>
#include <string>

namespace ncp {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition (dependent radicands, wild
// primes, sums of invariants that do not vanish, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A bounded search ran out of candidates before finding what was asked for.
class SearchExhausted : public Error {
 public:
  using Error::Error;
};

[[noreturn]] inline void fail(const std::string& what) { throw InvalidArgument(what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(what);
}

}  // namespace ncp

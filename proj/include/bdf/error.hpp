#pragma once

#include <stdexcept>
#include <string>

namespace bdf {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A numerical or desk-scale guard tripped (singular map, oversized problem).
class GuardError : public Error {
 public:
  using Error::Error;
};

// Malformed experiment configuration or serialized input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace bdf

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is well formed but violates a mathematical precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotFredholm : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NonCommutingError : public PreconditionError {
 public:
  NonCommutingError(std::size_t i, std::size_t j)
      : PreconditionError("operators " + std::to_string(i) + " and " + std::to_string(j) +
                          " do not commute"),
        first(i),
        second(j) {}
  std::size_t first, second;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace jt

// Copyright 2026 The ink authors. Apache 2.0 License.

#pragma once

#include <stdexcept>
#include <string>

namespace ink {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible for an operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A NaN or infinity was produced.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data (corpus files, labels, checkpoints).
class DataError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an API precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace ink

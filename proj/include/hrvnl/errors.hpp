#pragma once

#include <stdexcept>
#include <string>

namespace hrvnl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input has zero variance or is otherwise unusable for normalization.
struct DegenerateInputError : Error {
  using Error::Error;
};

// Series too short for the requested operation.
struct InsufficientDataError : Error {
  using Error::Error;
};

struct BoundsError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

// Sequence lengths do not match / empty where non-empty required.
struct ShapeError : Error {
  using Error::Error;
};

struct ParameterError : Error {
  using Error::Error;
};

struct UndefinedEntropyError : Error {
  using Error::Error;
};

struct CalibrationFailureError : Error {
  using Error::Error;
};

// A Gaussian autocorrelation fell outside the populated calibration range.
struct ExtrapolationError : Error {
  using Error::Error;
};

struct IntegrationError : Error {
  using Error::Error;
};

struct TestInvalidError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace hrvnl

#pragma once

#include <stdexcept>
#include <string>

namespace sal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad parameter or mismatched dimensions.
struct InvalidArgument : Error {
  using Error::Error;
};

// Input data violates a contract (non-finite samples, values outside [0,1]).
struct InvalidInput : Error {
  using Error::Error;
};

// An operation that needs at least one element got none.
struct EmptyInput : Error {
  using Error::Error;
};

// Ground truth is empty (or full) where the metric is undefined.
struct InvalidGroundTruth : Error {
  using Error::Error;
};

// Metric value undefined for this input (e.g. overlap of two empty masks).
struct UndefinedMetric : Error {
  using Error::Error;
};

// File problems; message names the offending path.
struct IoError : Error {
  using Error::Error;
};

}  // namespace sal

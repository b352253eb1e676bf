#pragma once

#include <stdexcept>
#include <string>

namespace tensegrid {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed config/topology/dataset. CLI exit code 2.
struct ConfigError : Error {
  using Error::Error;
};

/// Simulation produced a non-finite or singular quantity.
struct NumericalError : Error {
  using Error::Error;
};

/// Training aborted (NaN loss or divergent schedule). CLI exit code 3.
struct TrainingError : Error {
  using Error::Error;
};

/// A gradient check exceeded tolerance. CLI exit code 4.
struct GradCheckError : Error {
  using Error::Error;
};

}  // namespace tensegrid

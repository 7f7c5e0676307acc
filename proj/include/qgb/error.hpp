#pragma once

#include <stdexcept>
#include <string>

namespace qgb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad or missing input files (TU text, JSONL container, caches).
struct IngestError : Error {
  using Error::Error;
};

// Non-finite values, eigensolver non-convergence, and similar numeric faults.
// The training loop catches this class and records the run as diverged.
struct NumericError : Error {
  using Error::Error;
};

// Invalid configuration (unknown method tag, bad schema, shape mismatch).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace qgb

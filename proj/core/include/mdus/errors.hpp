#pragma once

#include <stdexcept>
#include <string>

namespace mdus {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input data: malformed files, schema arity mismatches, unknown items.
struct ValidationError : Error {
  using Error::Error;
};

// Bad caller-supplied parameter (delta out of range, join precondition, ...).
struct ParameterError : Error {
  using Error::Error;
};

// The brute-force reference refuses inputs beyond its enumeration bounds
// instead of silently truncating.
struct OracleRefusal : Error {
  using Error::Error;
};

}  // namespace mdus

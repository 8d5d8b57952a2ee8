#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revguard {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Width or index mismatch between a pattern/circuit pair.
struct DimensionError : Error {
  using Error::Error;
};

// Exhaustive operation requested above the configured line limit.
struct CapacityError : Error {
  using Error::Error;
};

// Gate references lines outside the circuit, or target overlaps controls.
struct MalformedGateError : Error {
  using Error::Error;
};

// Trojan insertion slot or width violation.
struct InsertionError : Error {
  using Error::Error;
};

// make_symmetric precondition violation; message names the failed condition.
struct ConstructionError : Error {
  using Error::Error;
};

// Probability arguments outside the valid range.
struct DomainError : Error {
  using Error::Error;
};

// Scrambling level not applicable to the given ancilla count.
struct UnsupportedLevelError : Error {
  using Error::Error;
};

// Textual input uses a feature outside the supported subset.
struct UnsupportedFeatureError : Error {
  using Error::Error;
};

// Malformed textual input; carries the 1-based source line.
struct ParseError : Error {
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line(line) {}
  std::size_t line;
};

}  // namespace revguard

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cineseg {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes:
// ConfigError/ParseError -> 2, NumericError -> 3, IoError -> 4.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Tensor/layer dimension mismatches.
struct ShapeError : Error {
  using Error::Error;
};

// Illegal use of stateful objects (e.g. backward on a consumed tape).
struct StateError : Error {
  using Error::Error;
};

// API contract violations (non-scalar loss handed to grad_check, empty lists).
struct ContractError : Error {
  using Error::Error;
};

// Degenerate statistics: a normalization group with fewer than two elements.
struct StatsError : Error {
  using Error::Error;
};

// Invalid configuration values or unbuildable architectures.
struct ConfigError : Error {
  using Error::Error;
};

// Malformed input file. Carries the byte offset where parsing stopped.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t byte_offset)
      : Error(msg + " (byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  explicit ParseError(const std::string& msg) : Error(msg), offset(0) {}
  std::size_t offset;
};

// Corrupt or truncated persisted state (checkpoint CRC/version failures).
struct IntegrityError : Error {
  using Error::Error;
};

// Filesystem-level failures.
struct IoError : Error {
  using Error::Error;
};

// Numeric failures during training (NaN gradients, divergence).
struct NumericError : Error {
  using Error::Error;
};

// Metric undefined for the given inputs (e.g. APD on an empty contour).
struct MetricError : Error {
  using Error::Error;
};

}  // namespace cineseg

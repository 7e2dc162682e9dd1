#pragma once

#include <stdexcept>
#include <string>

namespace ggcn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Incompatible tensor/graph shapes.
struct DimensionError : Error {
    using Error::Error;
};

/// Invalid configuration value (zero grid dimension, bad stride, ...).
struct ConfigError : Error {
    using Error::Error;
};

/// Out-of-range class index or node index.
struct IndexError : Error {
    using Error::Error;
};

/// API misuse: non-scalar backward, missing gradients, tensor not on tape.
struct ContractError : Error {
    using Error::Error;
};

/// Coregistration has nothing to correlate (empty mask, flat gradient).
struct NoSignalError : Error {
    using Error::Error;
};

/// Synthetic scene generation could not place the requested geometry.
struct GenerationError : Error {
    using Error::Error;
};

/// A test oracle was invoked outside its validity range (node cap exceeded).
struct OracleError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace ggcn

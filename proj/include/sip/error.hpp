#pragma once

#include <stdexcept>
#include <string>

namespace sip {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contract violation on an operation input (dimension mismatch, bad label, ...)
struct InvalidArgument : Error {
    using Error::Error;
};

// File system / serialization failures
struct IoError : Error {
    using Error::Error;
};

// Non-finite values where finite ones are required
struct NumericalError : Error {
    using Error::Error;
};

// Bad or inconsistent configuration
struct ConfigError : Error {
    using Error::Error;
};

// Checkpoint cannot be loaded (corrupt, wrong version, wrong architecture)
struct CheckpointError : Error {
    using Error::Error;
};

}  // namespace sip

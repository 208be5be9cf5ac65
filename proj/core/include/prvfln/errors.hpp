#pragma once

#include <stdexcept>
#include <string>

namespace prvfln {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad numeric payload: non-finite values, malformed cells, corrupt files.
struct DataError : Error {
    using Error::Error;
};

// Vector/matrix size mismatch.
struct DimensionError : Error {
    using Error::Error;
};

// Invalid configuration (flags, thresholds, scopes).
struct ConfigError : Error {
    using Error::Error;
};

// Stream schema changed mid-run or is unusable (missing target, bad header).
struct SchemaError : Error {
    using Error::Error;
};

// Snapshot file problems: bad magic, version mismatch, checksum failure.
struct SnapshotError : Error {
    using Error::Error;
};

// Operation requires a trained model (at least one data cloud).
struct ModelEmptyError : Error {
    using Error::Error;
};

}  // namespace prvfln

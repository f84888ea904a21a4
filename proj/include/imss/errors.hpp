#pragma once

#include <stdexcept>
#include <string>

namespace imss {

/// Invalid model/profile parameters (negative ratios, overlapping bounds, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mismatched vector/tile/model dimensions.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Row/column/element index out of range.
struct IndexError : std::out_of_range {
    explicit IndexError(const std::string& msg) : std::out_of_range(msg) {}
};

/// Operation requires state the object does not have (unfitted model,
/// unmaterialized database, empty database).
struct StateError : std::logic_error {
    explicit StateError(const std::string& msg) : std::logic_error(msg) {}
};

/// Input value outside the operation's domain.
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Encoder fitting failed (degenerate covariance, zero spread).
struct FitError : std::runtime_error {
    explicit FitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Train/test split cannot be formed.
struct SplitError : std::runtime_error {
    explicit SplitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed config, CSV, or binary input file.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem read/write failure.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace imss

#pragma once

#include <stdexcept>
#include <string>

namespace aniso {

/// Invalid scenario/config input; message names the offending field.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A solver failed to converge; message carries the context (step index,
/// residual).
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace aniso

// SPDX-License-Identifier: Apache-2.0
// Copyright (c) sagsense contributors

#pragma once

#include <stdexcept>
#include <string>

namespace sagsense {

/// An argument violates a documented precondition (dimensions, ranges, signs).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An iterative routine hit its iteration cap before reaching tolerance.
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A matrix required to be positive definite has an eigenvalue below the floor.
struct NotPositiveDefinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A linear system is singular (or numerically indistinguishable from singular).
struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A root bracket does not enclose a sign change.
struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Geometry degenerates (coincident points, zero-length paths).
struct DegenerateGeometry : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A configuration file violates the schema; message names the key path.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sagsense

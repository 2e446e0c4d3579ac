// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace nofade {

/// Base of every error this library throws. Messages always name the
/// offending input (path, row, class label, GPU type) so batch runs are
/// debuggable from the log alone.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unreadable file, unsupported raster format, or corrupt stream.
struct DecodeError : Error {
    using Error::Error;
};

/// An operation was asked to summarize nothing (empty histogram, empty
/// sample list, fewer than two classes, zero JSD sum).
struct DegenerateInputError : Error {
    using Error::Error;
};

/// KL divergence evaluated where P has mass but Q has none.
struct SupportError : Error {
    using Error::Error;
};

/// Two distributions with different bin structures were combined.
struct ShapeError : Error {
    using Error::Error;
};

/// An input value violated a documented range or precondition.
struct ValidationError : Error {
    using Error::Error;
};

/// A value left the mathematical domain of an operation (e.g. a FLOPs
/// figure at or below the log floor).
struct DomainError : Error {
    using Error::Error;
};

/// A key did not resolve in a database (unknown GPU type, missing
/// complexity score).
struct LookupError : Error {
    using Error::Error;
};

/// Bad run configuration (non-positive carbon intensity, malformed
/// config file).
struct ConfigError : Error {
    using Error::Error;
};

/// Filesystem failure: unwritable path, unrenamable temp file.
struct IoError : Error {
    using Error::Error;
};

/// One or more registry rows failed validation; the message lists every
/// failing row. No partial record list is ever returned.
struct RegistryError : Error {
    using Error::Error;
};

}  // namespace nofade

#pragma once

#include <stdexcept>
#include <string>

namespace tiresense {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad inputs or a violated contract. The CLI maps these to exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// File system / parse failures on external files. The CLI maps these to exit code 2.
class IoError : public Error {
public:
    using Error::Error;
};

/// Loaded deflection reaches the effective radius.
class GeometryError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Sample rate too low to resolve the contact patch.
class ResolutionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NoPeakError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class TooShortError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class InvalidCutoffError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Tangential extrema in the wrong order or too far apart to be a contact patch.
class EdgeOrderError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class RankDeficiencyError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Load surface cannot be inverted at the requested pressure.
class DenominatorError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class OutOfRangeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// File content does not match the expected schema or version.
class SchemaError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

}  // namespace tiresense

#pragma once

#include <stdexcept>
#include <string>

namespace innc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands with incompatible shapes or variable counts.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Argument outside the documented domain of an operation.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Character does not satisfy the quotient relation of the base ring.
class RelationViolation : public Error {
public:
    using Error::Error;
};

/// The trivial character was passed where the definition excludes it.
class IdentityCharacter : public Error {
public:
    using Error::Error;
};

/// A combinatorial computation would exceed its configured cap.
class SizeCapExceeded : public Error {
public:
    using Error::Error;
};

/// Required data (euler numbers, Hodge polynomials, ...) is absent.
class MissingData : public Error {
public:
    using Error::Error;
};

/// Malformed input document.
class SchemaError : public Error {
public:
    using Error::Error;
};

}  // namespace innc

#pragma once

#include <stdexcept>
#include <string>

namespace necksplit {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fewer than two points, mismatched dimensions, or zero total length.
class InvalidCurve : public Error {
public:
    using Error::Error;
};

/// An argument outside the domain of the operation (t outside [0,1], x >= y, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Caller broke a precondition (shape mismatch, open curve where a loop is needed, ...).
class ContractError : public Error {
public:
    using Error::Error;
};

/// A color constraint that cannot be satisfied or does not partition the index set.
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// Exhaustive search refused because the instance is too large.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace necksplit

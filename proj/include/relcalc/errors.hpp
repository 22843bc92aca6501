#pragma once

#include <stdexcept>
#include <string>

namespace relcalc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in spaces of different dimension.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A vector was passed where an element of D(T) is required.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two routes that must agree did not, or a decomposition broke down.
class NumericalBreakdown : public Error {
public:
    using Error::Error;
};

} // namespace relcalc

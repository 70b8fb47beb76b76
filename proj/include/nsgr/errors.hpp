#pragma once

#include <stdexcept>
#include <string>

namespace nsgr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input could not be turned into a semigroup (bad syntax, empty list, gcd ≠ 1).
/// The CLI maps every InputError to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class EmptyInput : public InputError {
public:
    EmptyInput() : InputError("empty generator list") {}
};

class GcdNotOne : public InputError {
public:
    explicit GcdNotOne(long long gcd)
        : InputError("generators have gcd " + std::to_string(gcd) + ", expected 1") {}
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

class BoundsTooLarge : public InputError {
public:
    using InputError::InputError;
};

/// A requested table would exceed the NSGR_MAX_TABLE cap.
class TableLimitExceeded : public InputError {
public:
    using InputError::InputError;
};

/// Precondition failures of individual operations.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class NotInSemigroup : public PreconditionError {
public:
    NotInSemigroup(long long x, const char* where)
        : PreconditionError(std::to_string(x) + " is not an element of " + where) {}
};

class NotDefectClass : public PreconditionError {
public:
    explicit NotDefectClass(int cls)
        : PreconditionError("residue class " + std::to_string(cls) + " has a = b") {}
};

class NotThreeGenerated : public PreconditionError {
public:
    explicit NotThreeGenerated(std::size_t n)
        : PreconditionError("expected exactly 3 minimal generators, got " + std::to_string(n)) {}
};

class NotSymmetric : public PreconditionError {
public:
    NotSymmetric() : PreconditionError("semigroup is not symmetric") {}
};

/// A property that the theory guarantees failed to hold. Seeing one means a bug
/// or a counterexample; either way the details matter.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class InvalidBounds : public InputError {
public:
    using InputError::InputError;
};

class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace nsgr

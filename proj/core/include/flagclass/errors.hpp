#pragma once

#include <stdexcept>
#include <string>

namespace flagclass {

/// Base of every error raised by the library. Callers that only need a
/// message can catch this; the CLI maps the concrete types to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NotPrime : public Error {
public:
    using Error::Error;
};

/// A state space or field order exceeds the configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// An argument lies outside P(d), U(d) or u(d) where membership is required.
class MembershipViolation : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

class VerificationFailed : public Error {
public:
    using Error::Error;
};

class DuplicateAbscissa : public Error {
public:
    using Error::Error;
};

class NotAssociated : public Error {
public:
    using Error::Error;
};

class NoFit : public Error {
public:
    using Error::Error;
};

}  // namespace flagclass

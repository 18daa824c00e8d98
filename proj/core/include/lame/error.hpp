#pragma once

#include <stdexcept>
#include <string>

namespace lame {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition. The CLI maps these to exit code 2.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class OrientationError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class DomainError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Evaluation at a pole of a meromorphic function.
class PoleError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// An iterative method failed to converge or lost too much accuracy.
class NumericsError : public Error {
public:
    using Error::Error;
};

// Candidate zeros that could neither be confirmed nor discarded, or a result
// count the underlying theory rules out.
class AmbiguityError : public NumericsError {
public:
    using NumericsError::NumericsError;
};

} // namespace lame

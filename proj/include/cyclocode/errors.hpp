#pragma once

#include <stdexcept>
#include <string>

namespace cyclocode {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter violates a precondition (non-prime p, N not
/// dividing r - 1, a congruence case that no closed form covers, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// The request exceeds a configured size limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// An operation was applied outside its mathematical domain (log of zero).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An internal cross-check failed. Seeing one of these means a bug or a
/// violated standing assumption, never bad user input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace cyclocode

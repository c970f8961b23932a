#pragma once

#include <stdexcept>
#include <string>

namespace contractia {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed caller input: out-of-range ids, loops, bad parameters.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An operation was called on a state that violates its stated hypothesis.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Text input that does not follow the graph6 / corpus format.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration stopped at its configured candidate budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed (a bug, never a caller mistake).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace contractia

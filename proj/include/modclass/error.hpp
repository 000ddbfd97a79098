#pragma once

#include <stdexcept>
#include <string>

namespace modclass {

/// Base of every exception thrown by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed ring-spec expression or formula file.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Data that parses but violates the ring or module axioms.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A configured size or enumeration limit would be exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Operation requires a two-sided ideal, a submodule, matching rings, ...
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Two independent computations disagree; indicates an engine bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace modclass

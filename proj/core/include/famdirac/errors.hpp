#pragma once

#include <stdexcept>
#include <string>

namespace famdirac {

/// Base of every error raised by the engine. `code()` is a stable,
/// machine-readable identifier used by the CLI diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Malformed or inconsistent input data (exit status 2 in the CLI).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A structural invariant of a family, module or element does not hold.
class InvariantViolation : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Arithmetic precondition failure (division by zero polynomial, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace famdirac

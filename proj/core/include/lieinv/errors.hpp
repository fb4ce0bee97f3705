#pragma once

#include <stdexcept>
#include <string>

namespace lieinv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic misuse: division by zero, mixing incompatible towers, singular matrices.
class MathError : public Error {
public:
    using Error::Error;
};

/// Malformed literal, expression or file. `where` is a human readable location.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::string where = {})
        : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// A structure-constant table that is not a Lie algebra.
class InvalidAlgebra : public Error {
public:
    using Error::Error;
};

/// Refused request: excluded parameter value, unknown label, wrong dimension.
class ConstraintViolation : public Error {
public:
    using Error::Error;
};

/// A requested expected table that is not tabulated.
class NoFixture : public ConstraintViolation {
public:
    using ConstraintViolation::ConstraintViolation;
};

/// Computed data disagrees with a stored fixture, or an internal cross-check failed.
class FixtureMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace lieinv

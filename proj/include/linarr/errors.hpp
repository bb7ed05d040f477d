#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linarr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Malformed textual input; `position` is the byte offset of the problem.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

/// A precondition of a domain operation does not hold for the given input.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace linarr

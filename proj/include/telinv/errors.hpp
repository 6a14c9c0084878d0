#pragma once

#include <stdexcept>
#include <string>

namespace telinv {

// Argument outside the declared domain of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A (size, method, representation) combination the engines do not cover.
class UnsupportedError : public DomainError {
public:
    using DomainError::DomainError;
};

class SingularError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Factorial-cost engines refuse sizes above their cap.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// A standard-function encoding failed to round to an integer within tolerance.
class RepresentationMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace telinv

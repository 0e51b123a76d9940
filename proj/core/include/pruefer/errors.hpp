#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pruefer {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed spec text or element literal. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
        : Error(decorate(message, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string decorate(const std::string& message, std::size_t line, std::size_t column) {
        if (line == 0) return message;
        return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
};

/// A configured size or search limit would be exceeded.
class BoundError : public Error {
public:
    using Error::Error;
};

/// A violated precondition: ring mismatch, non-maximal ideal, improper quotient, ...
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// Verdicts that contradict a known implication. Always a bug, never a result.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace pruefer

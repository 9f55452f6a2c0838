#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace npoisson {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live on different coordinate charts.
class ChartMismatch : public Error {
public:
    ChartMismatch() : Error("operands live on different charts") {}
};

/// A precondition on grades, arities, indices or ranges was violated.
class DomainError : public Error {
public:
    using Error::Error;
};

/// exact_divide() found a nonzero remainder.
class NotDivisible : public Error {
public:
    NotDivisible() : Error("polynomial is not divisible") {}
};

/// Two independent computations of the same quantity disagreed.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column), message_(message) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

} // namespace npoisson

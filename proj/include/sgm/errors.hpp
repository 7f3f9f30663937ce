#pragma once

#include <stdexcept>
#include <string>

namespace sgm {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid arguments, malformed graphs, out-of-range parameters. CLI exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Malformed input text; carries the 1-based line number. CLI exit code 2.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& message, long long line)
        : ValidationError("line " + std::to_string(line) + ": " + message), line_(line) {}

    long long line() const { return line_; }

private:
    long long line_;
};

// Enumeration would exceed the configured subset budget. CLI exit code 3.
class BudgetError : public Error {
public:
    BudgetError(const std::string& message, std::string required)
        : Error(message), required_(std::move(required)) {}

    // Decimal string: the budget that would be needed to proceed.
    const std::string& required_budget() const { return required_; }

private:
    std::string required_;
};

} // namespace sgm

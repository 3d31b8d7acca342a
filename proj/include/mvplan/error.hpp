#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvplan {

// Base class for all library errors. The code is a short stable tag used by
// the command-line front end in its `error[<code>]:` diagnostics.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Syntax errors carry a 1-based source location.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("parse", message), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message) : Error("validation", message) {}
};

class LimitError : public Error {
public:
    explicit LimitError(const std::string& message) : Error("limit", message) {}
};

class InvalidLassoError : public Error {
public:
    explicit InvalidLassoError(const std::string& message) : Error("invalid-lasso", message) {}
};

} // namespace mvplan

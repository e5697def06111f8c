#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ltk {

/// Precondition on an element's shape was not met (mixed bidegrees, wrong rank).
class NotHomogeneousError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A class-level query received a chain that is not a cycle.
class NotACycleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation would exceed the configured basis-size limit.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          message_(message), line_(line), column_(column)
    {
    }

    ParseError(const std::string& file, const ParseError& inner)
        : std::runtime_error(file + ":" + inner.what()), message_(inner.message_), line_(inner.line_),
          column_(inner.column_)
    {
    }

    const std::string& message() const noexcept { return message_; }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

} // namespace ltk

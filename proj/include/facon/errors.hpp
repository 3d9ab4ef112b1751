#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace facon {

/// Raised when an operation is called outside its documented domain.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Syntax or semantic error in a mapping file, with 1-based position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                             message),
          line_(line), column_(column), message_(message) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// Sampling could not produce a parameter point meeting the genericity constraints.
class GenericityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace facon

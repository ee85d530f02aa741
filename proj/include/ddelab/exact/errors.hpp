#pragma once

#include <stdexcept>
#include <string>

namespace ddelab {

/// Input that does not conform to the expression grammar or corpus schema.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// A mathematical operation was asked for outside its domain
/// (division by zero, log-derivative of zero, singular formula).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A series computation lost every coefficient inside its truncation window.
/// Raising the truncation and replaying may resolve it.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ddelab

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superstab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance or coverage text. Line and column are 1-based; column 0
/// means the problem concerns the line as a whole.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) +
              (column ? ", column " + std::to_string(column) : std::string()) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A vertex, edge or set that does not belong to the instance it is used with.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked to work beyond its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace superstab

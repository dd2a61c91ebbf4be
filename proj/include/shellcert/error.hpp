#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shellcert {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments or documents. The CLI maps these to exit code 2.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A configured size limit was exceeded. The CLI maps these to exit code 3.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InvalidInput(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace shellcert

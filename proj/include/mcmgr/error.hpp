#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcmgr {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a polynomial expression or instance file.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A computation ran out of truncation degree, ambient budget, or random retries
/// (CLI exit code 3).
class ExhaustionError : public Error {
 public:
  using Error::Error;
};

}  // namespace mcmgr

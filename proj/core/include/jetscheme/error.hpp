#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jetscheme {

enum class ErrorKind {
  incompatible_operands,
  non_unit,
  range,
  instance,
  model,
  horizon,
  input,
  budget,
  sampling,
  inconsistent_input,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Domain failure raised by the library. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Malformed textual or JSON input. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace jetscheme

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hhlie {

enum class ErrorKind {
  parse,
  not_admissible,
  not_finite_dimensional,
  invalid_arrow,
  invalid_input,
  quotient_undefined,
  not_acyclic,
  delta_undefined,
  unsupported_characteristic,
  too_large,
  not_associative,
};

std::string_view to_string(ErrorKind kind);

/// Base of every exception thrown by the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(ErrorKind::parse, "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hhlie

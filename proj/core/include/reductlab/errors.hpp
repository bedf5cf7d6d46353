#pragma once

#include <stdexcept>
#include <string>

namespace reductlab {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Error carrying a source position, thrown by the text-format parsers.
class ParseError : public Error {
public:
  ParseError(const std::string& message, int line, int column = 0)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  static std::string format(const std::string& message, int line, int column) {
    std::string out = "line " + std::to_string(line);
    if (column > 0) {
      out += ", col " + std::to_string(column);
    }
    out += ": " + message;
    return out;
  }

  int line_;
  int column_;
};

}  // namespace reductlab

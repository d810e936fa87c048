#pragma once

#include <stdexcept>
#include <string>

namespace expansio {

// Thrown by the text-format parsers; carries a 1-based source position.
class parse_error : public std::runtime_error {
public:
  parse_error(std::string msg, int line, int column)
      : std::runtime_error(std::move(msg) + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

// Thrown when a computation would exceed a configured size/search cap.
class resource_limit_error : public std::runtime_error {
public:
  explicit resource_limit_error(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace expansio

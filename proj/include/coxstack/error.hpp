#pragma once

#include <stdexcept>
#include <string>

namespace coxstack {

/// Syntax error in a document or polynomial, with 1-based position
/// (0 when the position is unknown).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(format(msg, line, col)), line_(line), col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  static std::string format(const std::string& msg, int line, int col) {
    if (line <= 0) return msg;
    return "line " + std::to_string(line) + ", col " + std::to_string(col) +
           ": " + msg;
  }
  int line_;
  int col_;
};

/// Semantic error while assembling stack data (unknown variable,
/// inhomogeneous relation, bad arity, ...).
class BuildError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace coxstack

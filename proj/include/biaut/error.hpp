#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace biaut {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed regular expression or automaton document. `line` and `column`
/// are 1-based; 0 means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    std::string where;
    if (line != 0) where += "line " + std::to_string(line);
    if (column != 0) where += (where.empty() ? "" : ", ") + std::string("column ") + std::to_string(column);
    return where.empty() ? message : where + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A word or automaton uses a symbol outside the declared alphabet, or two
/// automata that must share an alphabet do not.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

/// A construction exceeded its configured state or element cap.
class CapError : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A transition table fails the diamond or acceptance property of biautomata.
class InvalidBiautomaton : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Never raised for valid input unless the
/// library itself is wrong.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace biaut

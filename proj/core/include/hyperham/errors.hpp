#pragma once

#include <stdexcept>
#include <string>

namespace hyperham {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A query violates its domain (|S| > k, d out of range, ...).
class InvalidQuery : public Error {
 public:
  using Error::Error;
};

/// Parameters violate an operation's preconditions (divisibility, sizes, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class IncompatibleHypergraphs : public Error {
 public:
  using Error::Error;
};

/// An ExtremalSpec fails a membership condition of the extremal family.
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class InvalidWitness : public Error {
 public:
  using Error::Error;
};

class InvalidPattern : public Error {
 public:
  using Error::Error;
};

/// Requested computation exceeds a hard size cap or time budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NoCertificate : public Error {
 public:
  using Error::Error;
};

/// Malformed .khg input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace hyperham

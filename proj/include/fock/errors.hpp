#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fock {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input stream (bad header, field count, value...). Carries the
// 1-based line number of the offending record; 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An atom of the constructed four-point measure came out negative. The index
// is 1-based, matching the atom labels {1},{2},{3},{4}.
class NegativeAtomError : public Error {
 public:
  NegativeAtomError(int index, double value)
      : Error("atom " + std::to_string(index) + " is negative (" + std::to_string(value) + ")"),
        index_(index),
        value_(value) {}

  int index() const { return index_; }
  double value() const { return value_; }

 private:
  int index_;
  double value_;
};

}  // namespace fock

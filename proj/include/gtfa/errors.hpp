#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gtfa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input text (group tables, CSV files, kernel specs). Carries the 1-based line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A group or dual failed one or more structural checks.
class InvariantError : public Error {
 public:
  explicit InvariantError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

class GroupMismatch : public Error {
 public:
  GroupMismatch() : Error("operands live on different groups") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Errors caused by the numbers rather than the configuration.
class NumericError : public Error {
 public:
  using Error::Error;
};

class SingularKernel : public NumericError {
 public:
  explicit SingularKernel(std::vector<std::pair<int, int>> pairs);
  /// (xi, y) index pairs where the ambiguity block is not invertible.
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

 private:
  std::vector<std::pair<int, int>> pairs_;
};

class MarginNegative : public NumericError {
 public:
  MarginNegative(int index, double value);
  int index() const { return index_; }
  double value() const { return value_; }

 private:
  int index_;
  double value_;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

class TruncatedFile : public Error {
 public:
  using Error::Error;
};

}  // namespace gtfa

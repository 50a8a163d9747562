#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dgq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (non-associative constants,
/// broken complex condition, mismatched algebras, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// The finite-dimensional engine cannot handle this quiver (it has a
/// directed cycle, so its path algebra is infinite-dimensional).
class EngineIneligible : public Error {
 public:
  EngineIneligible(const std::string& message, std::vector<std::string> cycle)
      : Error(message), cycle_(std::move(cycle)) {}
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

class ResolutionCapExceeded : public Error {
 public:
  using Error::Error;
};

class GlobalDimensionExceeded : public Error {
 public:
  GlobalDimensionExceeded(const std::string& message, std::string witness)
      : Error(message), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

}  // namespace dgq

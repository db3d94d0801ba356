#pragma once

#include <stdexcept>
#include <string>

namespace iip {

// Operand shapes do not conform.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A weight that is not symmetric or not involutory.
class WeightError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed. Always a bug, never a data problem.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed instance/cone/matrix document. `path` is a JSON pointer into the
// offending document.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string path, const std::string& what)
      : std::runtime_error((path.empty() ? std::string("/") : path) + ": " + what), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace iip

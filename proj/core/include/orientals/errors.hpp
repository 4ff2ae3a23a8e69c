#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orientals {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

// Raised when a chain map fails to be a morphism of orientals. `offending()`
// holds the vertex tuple of the first basis element that failed.
class ValidationError : public Error {
 public:
  ValidationError(std::string invariant, std::vector<int> offending, const std::string& detail)
      : Error(invariant + " at " + render(offending) + ": " + detail),
        invariant_(std::move(invariant)),
        offending_(std::move(offending)) {}

  const std::string& invariant() const noexcept { return invariant_; }
  const std::vector<int>& offending() const noexcept { return offending_; }

 private:
  static std::string render(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(v[k]);
    }
    return s + "]";
  }

  std::string invariant_;
  std::vector<int> offending_;
};

class NotChainMap : public ValidationError {
 public:
  NotChainMap(std::vector<int> at, const std::string& detail)
      : ValidationError("NotChainMap", std::move(at), detail) {}
};

class NotAugmented : public ValidationError {
 public:
  NotAugmented(std::vector<int> at, const std::string& detail)
      : ValidationError("NotAugmented", std::move(at), detail) {}
};

class NotEffective : public ValidationError {
 public:
  NotEffective(std::vector<int> at, const std::string& detail)
      : ValidationError("NotEffective", std::move(at), detail) {}
};

// Support-window or vertex-monotonicity failure on an otherwise valid map.
// Unreachable for correct inputs; it flags an implementation fault.
class SupportBoundsError : public ValidationError {
 public:
  SupportBoundsError(std::vector<int> at, const std::string& detail)
      : ValidationError("SupportBounds", std::move(at), detail) {}
};

class DefinednessError : public Error {
 public:
  using Error::Error;
};

class ConeError : public Error {
 public:
  using Error::Error;
};

class RecompositionError : public Error {
 public:
  using Error::Error;
};

class SampleError : public Error {
 public:
  using Error::Error;
};

class InvariantError : public Error {
 public:
  using Error::Error;
};

class WedgeUndefined : public Error {
 public:
  WedgeUndefined(std::string path, const std::string& detail)
      : Error("wedge undefined at " + path + ": " + detail), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class ParseError : public Error {
 public:
  ParseError(std::string position, const std::string& detail)
      : Error("parse error at " + position + ": " + detail), position_(std::move(position)) {}
  const std::string& position() const noexcept { return position_; }

 private:
  std::string position_;
};

}  // namespace orientals

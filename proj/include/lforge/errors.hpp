#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected, const std::string& text)
      : Error("syntax error at position " + std::to_string(position) + ": expected " + expected +
              " in \"" + text + "\""),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class GradingError : public Error {
 public:
  using Error::Error;
};

class DegreeCapError : public Error {
 public:
  using Error::Error;
};

class FloatModeError : public Error {
 public:
  using Error::Error;
};

/// Group tables that are not closed, lack the identity, or contain a non-orthogonal matrix.
class GroupError : public Error {
 public:
  using Error::Error;
};

}  // namespace lforge

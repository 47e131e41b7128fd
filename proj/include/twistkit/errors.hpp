#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownGenerator : public Error {
 public:
  using Error::Error;
};

class TruncationConflict : public Error {
 public:
  using Error::Error;
};

/// A series (exp, adjoint action, inverse) did not terminate under the
/// active truncation policy.
class SeriesDiverges : public Error {
 public:
  using Error::Error;
};

/// Positive powers of c survived a contraction limit.
class DivergentLimit : public Error {
 public:
  DivergentLimit(const std::string& what, std::string offending)
      : Error(what), offending_(std::move(offending)) {}
  const std::string& offending() const { return offending_; }

 private:
  std::string offending_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace twistkit

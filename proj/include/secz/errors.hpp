#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace secz {

/// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed zero-table or coefficient-file line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Ordinates not strictly increasing; `index` is the first offending entry.
class MonotonicityError : public Error {
 public:
  MonotonicityError(std::size_t index, std::size_t line, const std::string& what)
      : Error(what), index_(index), line_(line) {}
  std::size_t index() const noexcept { return index_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t index_;
  std::size_t line_;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// Data carries fewer digits than required.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Cutoff outside what the zero table can vouch for.
class CoverageError : public Error {
 public:
  using Error::Error;
};

/// Cutoff indistinguishable from a tabulated ordinate.
class CoincidentCutoffError : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's domain (pole, radius, caps, sign).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Iteration or search that failed to meet its contract.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace secz

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clique_spectra {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph text. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An argument violates a documented precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace clique_spectra

#pragma once

#include <stdexcept>
#include <string>

namespace freeshift {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value violates a structural law (group axioms, shift invariance, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Caller passed an argument outside the operation's domain of indices/sets.
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured budget or cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Operation is mathematically undefined for the input (e.g. entropy of the
// empty shift).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A self-check failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& msg)
      : Error(file + ":" + std::to_string(line) + ": " + msg), file_(file), line_(line) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

}  // namespace freeshift

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace histcode {

// Base type for every recoverable error raised by the toolkit. CLI entry
// points catch this and report the message on stderr.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RepositoryUnreadable : public Error {
 public:
  using Error::Error;
};

class MethodNotFound : public Error {
 public:
  using Error::Error;
};

// Malformed input file; carries the 1-based line number of the offending line.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UnresolvedMethod : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class TooFewExamples : public Error {
 public:
  using Error::Error;
};

class DegenerateLabels : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace histcode

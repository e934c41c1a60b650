#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace faultsim {

// Every error raised by the library derives from Error so callers (the CLI in
// particular) can map the category onto an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that violates a mathematical precondition: log of zero, an empty
// graph, k larger than the number of points, unequal Hamming lengths.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed file content. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

// A configuration that cannot serve the request, e.g. a cost matrix
// without an entry for a character that occurs in the input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace faultsim

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifr {

/// Base of every error the engine raises. Callers that only care about
/// "did it work" catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed hierarchy document. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed document that violates a hierarchy invariant.
class SemanticError : public Error {
 public:
  SemanticError(std::string subject, const std::string& what);
  const std::string& subject() const noexcept { return subject_; }

 private:
  std::string subject_;
};

/// Bad row in an observation file. Row numbers count the header as row 1.
class FormatError : public Error {
 public:
  FormatError(std::size_t row, const std::string& what);
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class DuplicateKeyError : public Error {
 public:
  using Error::Error;
};

class UnknownIndicatorError : public Error {
 public:
  explicit UnknownIndicatorError(std::vector<std::string> offenders);
  const std::vector<std::string>& offenders() const noexcept { return offenders_; }

 private:
  std::vector<std::string> offenders_;
};

/// Invalid policy or configuration (e.g. goalposts without declared bounds).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Numeric precondition violated (non-finite input, too few ranks, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested entity (country-year, score kind) does not exist.
class LookupError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ifr

#include "ifr/error.hpp"

#include <utility>

namespace ifr {

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string& what)
    : Error("syntax error at line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

SemanticError::SemanticError(std::string subject, const std::string& what)
    : Error(what), subject_(std::move(subject)) {}

FormatError::FormatError(std::size_t row, const std::string& what)
    : Error("row " + std::to_string(row) + ": " + what), row_(row) {}

namespace {

std::string join_offenders(const std::vector<std::string>& ids) {
  std::string out = "unknown indicator id(s): ";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += ids[i];
  }
  return out;
}

}  // namespace

UnknownIndicatorError::UnknownIndicatorError(std::vector<std::string> offenders)
    : Error(join_offenders(offenders)), offenders_(std::move(offenders)) {}

}  // namespace ifr

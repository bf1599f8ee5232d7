#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace detgb {

// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands belong to different ring contexts.
class ContextMismatchError : public Error {
 public:
  explicit ContextMismatchError(const std::string& what) : Error(what) {}
};

// A precondition on user-supplied data failed (zero dimensions, non-prime
// characteristic, invalid region, zero polynomial where nonzero required, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// A computation exceeded its resource budget. Distinct from mathematical
// failure: the caller can retry with larger limits.
class ResourceLimitError : public Error {
 public:
  enum class Limit { pairs, wall_time, iterations };

  ResourceLimitError(Limit which, const std::string& what)
      : Error(what), which_(which) {}

  Limit which() const noexcept { return which_; }

 private:
  Limit which_;
};

// Diagnostic from the ideal-expression parser. `code` distinguishes plain
// syntax errors from semantic ones (region out of range, minor size too big).
class ParseError : public Error {
 public:
  enum class Code { syntax, region_out_of_range, minor_too_large };

  ParseError(Code code, std::size_t line, std::size_t column,
             std::size_t offset, const std::string& what)
      : Error(what), code_(code), line_(line), column_(column), offset_(offset) {}

  Code code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Code code_;
  std::size_t line_;
  std::size_t column_;
  std::size_t offset_;
};

}  // namespace detgb

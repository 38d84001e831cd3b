#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentagon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Argument outside the domain of a closed-form function or generator.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A counter would exceed 128 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive oracle was asked for an instance beyond its hard limit.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// The input violates a structural hypothesis (contains a C5, an induced C4,
/// a short Berge cycle, ...). The witness lists the offending vertices.
class StructuralError : public Error {
 public:
  StructuralError(const std::string& message, std::vector<std::uint32_t> witness)
      : Error(message), witness_(std::move(witness)) {}

  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::uint32_t> witness_;
};

}  // namespace pentagon

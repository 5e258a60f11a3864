#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "girthcut/types.hpp"

namespace girthcut {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input too large for an exhaustive routine.
class LimitError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A certificate or theorem check failed. The witness is a directed cycle
/// when one is available.
class VerificationError : public Error {
 public:
  VerificationError(const std::string& what, std::vector<Vertex> witness = {})
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  std::vector<Vertex> witness_;
};

}  // namespace girthcut

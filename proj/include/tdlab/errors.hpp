#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tdlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6, edge list, labeling csv, family spec).
/// `offset` is the byte position of the offending character, or npos.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset = npos)
      : Error(offset == npos ? what : what + " at byte offset " + std::to_string(offset)),
        offset_(offset) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A precondition on a domain value failed (edge not present, vertex out of
/// range, bad family parameter, infeasible labeling passed where a feasible
/// one is required).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The exact solver refused or abandoned an instance that exceeds its caps.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace tdlab

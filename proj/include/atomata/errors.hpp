#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace atomata {

// Base class for all engine errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text. `line`/`column` are 1-based; 0 means unknown.
struct ParseError : Error {
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(what), line(line), column(column) {}
  int line;
  int column;
};

// Ill-typed use of the theory: LT under equality, undeclared constant,
// mixing objects over different theory kinds, arity/tag mismatches.
struct TheoryError : Error {
  using Error::Error;
};

// An iterative procedure exhausted its iteration budget.
struct CapExceeded : Error {
  CapExceeded(const std::string& what, std::uint64_t iterations)
      : Error(what), iterations(iterations) {}
  std::uint64_t iterations;
};

}  // namespace atomata

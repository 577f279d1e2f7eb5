#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fpure {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

// Mixing coefficient fields (or two distinct moduli) in one operation.
class FieldMismatch : public Error {
public:
  using Error::Error;
};

class ExponentOverflow : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public Error {
public:
  using Error::Error;
};

// A prime unusable for the requested reduction (divides a denominator,
// kills the polynomial, or is not prime at all).
class BadPrime : public Error {
public:
  BadPrime(std::uint64_t p, const std::string& what)
      : Error("p=" + std::to_string(p) + ": " + what), prime(p) {}
  std::uint64_t prime;
};

// Deterministic resource cap hit inside the Buchberger engine.
class BudgetExceeded : public Error {
public:
  explicit BudgetExceeded(std::uint64_t steps)
      : Error("pair-reduction budget of " + std::to_string(steps) + " exceeded"),
        budget(steps) {}
  std::uint64_t budget;
};

// Combinatorial size cap hit in the compatibility checker.
class CapExceeded : public Error {
public:
  explicit CapExceeded(std::uint64_t size)
      : Error("combinatorial size " + std::to_string(size) + " exceeds cap"),
        size(size) {}
  std::uint64_t size;
};

class SingularReduction : public Error {
public:
  explicit SingularReduction(std::uint64_t p)
      : Error("reduction mod " + std::to_string(p) + " is singular"), prime(p) {}
  std::uint64_t prime;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
              ": " + what),
        line(line), column(column) {}
  int line;
  int column;
};

}  // namespace fpure

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lablogic {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed formula text. `offset` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Evaluation failures: unbound atoms, unknown states, a conditional handed
// to the four-valued (conditional-free) evaluator.
class EvalError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (zero-probability condition,
// cells that do not behave as a partition, coherent quotients handed to a
// Dutch-book recipe, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// p(A|B) requested with p(B) = 0.
class UndefinedConditional : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Malformed input file (model, distribution, bets, proof, trials).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Countermodel search refused or aborted because of its bounds.
class SearchBoundsError : public Error {
 public:
  using Error::Error;
};

}  // namespace lablogic

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lablogic/formula.hpp"
#include "lablogic/model.hpp"
#include "lablogic/probability.hpp"
#include "lablogic/rational.hpp"
#include "lablogic/truth.hpp"

namespace lablogic {

// The outcomes of a sequence of trials, one four-valued assignment each.
struct TrialStream {
  std::vector<std::string> atoms;
  std::vector<Assignment> trials;

  // Throws FormatError unless every trial values exactly `atoms`.
  void validate() const;
};

// Text format: a header line listing the atoms, then one line per trial
// with one N/T/F/TF token per atom. Blank lines and '#' comments are
// skipped. Throws FormatError.
TrialStream parse_trials(std::string_view text);
std::string render(const TrialStream& ts);

// n trials drawn independently from `d`. Draws are exact (a uniform integer
// below the common denominator of the masses), so the stream depends only
// on d, n and the seed.
TrialStream sample_trials(const StateDistribution& d, std::size_t n, std::uint64_t seed);

// Running counts for a fixed formula list:
//   freq(A)  = number of trials with T in v(A)
//   freq(~A) = number of trials with F in v(A)
class FrequencyCounter {
 public:
  // Throws EvalError if a formula contains ->.
  explicit FrequencyCounter(std::vector<Formula> formulas);

  void add(const Assignment& trial);

  std::size_t trials() const noexcept { return n_; }
  const std::vector<Formula>& formulas() const noexcept { return formulas_; }
  std::uint64_t freq(std::size_t i) const { return t_.at(i); }
  std::uint64_t neg_freq(std::size_t i) const { return f_.at(i); }
  // freq / n for every formula. Throws PreconditionError before any trial.
  std::vector<Rational> rfreq() const;

 private:
  std::vector<Formula> formulas_;
  std::vector<std::uint64_t> t_;
  std::vector<std::uint64_t> f_;
  std::size_t n_ = 0;
};

// Frequencies after a whole stream.
class FrequencyTable {
 public:
  FrequencyTable(std::vector<Formula> formulas, std::vector<std::uint64_t> freq, std::vector<std::uint64_t> neg_freq,
                 std::size_t n);

  std::size_t trials() const noexcept { return n_; }
  const std::vector<Formula>& formulas() const noexcept { return formulas_; }

  // Throw EvalError for a formula not in the table.
  std::uint64_t freq(const Formula& A) const;
  std::uint64_t neg_freq(const Formula& A) const;
  // Throw PreconditionError when the stream is empty.
  Rational rfreq(const Formula& A) const;
  Rational neg_rfreq(const Formula& A) const;
  // freq(A & B) / freq(B); A & B must be in the table. Throws
  // UndefinedConditional when freq(B) = 0.
  Rational conditional_rfreq(const Formula& A, const Formula& B) const;

  // rfreq of every formula, as a table for validate_probability.
  FormulaValues values() const;

 private:
  std::size_t position(const Formula& A) const;
  std::vector<Formula> formulas_;
  std::vector<std::uint64_t> freq_;
  std::vector<std::uint64_t> neg_freq_;
  std::size_t n_;
};

FrequencyTable run_trials(const TrialStream& ts, const std::vector<Formula>& formulas);

// How the negated-conditional frequency reads its clause over R2 pairs.
enum class NegatedMode {
  AsWritten,    // T in v(y, A) implies F in v(z, B)
  Conjunctive,  // T in v(y, A) and F in v(z, B)
};

std::string_view to_string(NegatedMode m);
// "as-written" or "conjunctive"; throws FormatError.
NegatedMode parse_negated_mode(std::string_view s);

// Fraction of the pairs (y, z) with R1 x y z on which T in v(y, A) implies
// T in v(z, B), for f = A -> B. Throws PreconditionError when f is not an
// implication or x has no R1 pairs.
Rational conditional_rfreq(const Model& m, StateId x, const Formula& f);

// Fraction of the pairs (y, z) with R2 x y z satisfying the mode's clause.
// Throws PreconditionError when f is not an implication or x has no R2
// pairs.
Rational negated_conditional_rfreq(const Model& m, StateId x, const Formula& f,
                                   NegatedMode mode = NegatedMode::AsWritten);

}  // namespace lablogic

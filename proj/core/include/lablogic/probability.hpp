#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lablogic/formula.hpp"
#include "lablogic/rational.hpp"
#include "lablogic/truth.hpp"

namespace lablogic {

// Mass attached to one complete four-valued assignment.
using WeightedAssignment = std::pair<Assignment, Rational>;

// A probability distribution over four-valued assignments to a fixed atom
// list. Masses are in [0, 1] and sum to exactly 1. Zero-mass entries are
// dropped; the rest are kept in enumeration order.
class StateDistribution {
 public:
  // Throws FormatError when an assignment is not total on `atoms`, mentions
  // other atoms, or repeats; PreconditionError when a mass is negative or
  // the masses do not sum to 1.
  StateDistribution(std::vector<std::string> atoms, std::vector<WeightedAssignment> masses);

  // Normalizes non-negative weights with a positive total.
  static StateDistribution from_weights(std::vector<std::string> atoms, std::vector<WeightedAssignment> weights);

  // Uniform over all 4^n assignments.
  static StateDistribution uniform(std::vector<std::string> atoms);

  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::vector<WeightedAssignment>& support() const noexcept { return support_; }
  Rational mass(const Assignment& a) const;

 private:
  StateDistribution() = default;
  std::vector<std::string> atoms_;
  std::vector<WeightedAssignment> support_;
};

// Sum of the masses of assignments designating `f`. Throws EvalError on an
// atom outside the distribution or on a conditional.
Rational induced_probability(const StateDistribution& d, const Formula& f);

// An explicit finite table of values.
using FormulaValues = std::map<Formula, Rational>;

// A formula table whose values all lie in [0, 1].
class ProbabilityAssignment {
 public:
  // Throws PreconditionError naming the first out-of-range formula.
  explicit ProbabilityAssignment(FormulaValues values);
  const FormulaValues& values() const noexcept { return values_; }

 private:
  FormulaValues values_;
};

// p(A | B) supplied directly, e.g. as a conditional betting quotient.
struct ConditionalValue {
  Formula target;
  Formula condition;
  Rational value;
};

struct ProbabilityViolation {
  // 1..4 for the axioms; 0 for the optional non-triviality axiom.
  int axiom;
  std::vector<Formula> witnesses;
  std::string detail;
};

struct ValidateOptions {
  bool require_nontrivial = false;
  std::vector<ConditionalValue> conditionals;
};

// Precomputes the axiom structure of a fixed domain so that many value
// vectors (e.g. every prefix of a trial stream) can be checked cheaply.
class ProbabilityValidator {
 public:
  // Every formula must be conditional-free (EvalError otherwise).
  explicit ProbabilityValidator(std::vector<Formula> domain, ValidateOptions options = {});

  const std::vector<Formula>& domain() const noexcept { return domain_; }

  // `values[i]` is the value of domain()[i].
  std::vector<ProbabilityViolation> violations(const std::vector<Rational>& values) const;
  bool coherent(const std::vector<Rational>& values) const;

 private:
  struct Additivity {
    std::size_t a, b, meet, join;
  };
  struct Conditional {
    std::size_t condition, meet;
    Rational value;
    Formula target;
  };
  std::vector<ProbabilityViolation> scan(const std::vector<Rational>& values, bool stop_at_first) const;

  std::vector<Formula> domain_;
  ValidateOptions options_;
  std::vector<std::pair<std::size_t, std::size_t>> entailments_;
  std::vector<Additivity> additivity_;
  std::vector<Conditional> conditionals_;
};

// Checks axioms i-iv on the finite domain of `values`: i) range; ii)
// monotonicity along four-valued entailment; iii) p(A&B) + p(A|B) = p(A) +
// p(B) wherever all four formulas are present; iv) each supplied
// conditional equals p(A&B)/p(B) when p(B) > 0 and both are present.
std::vector<ProbabilityViolation> validate_probability(const FormulaValues& values, const ValidateOptions& options = {});
std::vector<ProbabilityViolation> validate_probability(const ProbabilityAssignment& pa,
                                                       const ValidateOptions& options = {});

std::string describe(const ProbabilityViolation& v);

// A probability function: an assignment-level measure (a distribution, or a
// non-negative mass function produced by an update rule), an explicit
// formula table, or a value computed from other functions.
class ProbabilityFunction {
 public:
  enum class Kind { Measure, Table, Computed };

  ProbabilityFunction(const StateDistribution& d);  // NOLINT: implicit by design
  ProbabilityFunction(FormulaValues values);         // NOLINT

  // Non-negative masses with any total.
  static ProbabilityFunction measure(std::vector<std::string> atoms, std::vector<WeightedAssignment> masses);
  static ProbabilityFunction computed(std::function<Rational(const Formula&)> fn);

  // Throws EvalError for a formula outside a table's domain.
  Rational operator()(const Formula& f) const;

  Kind kind() const noexcept;
  // Measure only.
  const std::vector<std::string>& atoms() const;
  const std::vector<WeightedAssignment>& masses() const;
  // Table only.
  const FormulaValues& table() const;
  // A measure whose masses sum to 1, as a distribution.
  std::optional<StateDistribution> as_distribution() const;

 private:
  struct Impl;
  explicit ProbabilityFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// The values of `p` on `domain`.
FormulaValues tabulate(const ProbabilityFunction& p, const std::vector<Formula>& domain);

// p(A & B) / p(B). Throws UndefinedConditional when p(B) = 0.
Rational conditional_probability(const ProbabilityFunction& p, const Formula& A, const Formula& B);

// p(Bi & Bj) = 0 for i < j and p(B1 | ... | Bn) = 1. False for an empty family.
bool behaves_as_partition(const ProbabilityFunction& p, const std::vector<Formula>& cells);

// (p(A), sum over cells with p(Bi) > 0 of p(A|Bi) p(Bi)). Throws
// PreconditionError unless the cells behave as a partition under p.
std::pair<Rational, Rational> total_probability_check(const ProbabilityFunction& p, const Formula& A,
                                                      const std::vector<Formula>& cells);

}  // namespace lablogic

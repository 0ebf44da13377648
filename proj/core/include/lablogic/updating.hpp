#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lablogic/formula.hpp"
#include "lablogic/probability.hpp"
#include "lablogic/rational.hpp"

namespace lablogic {

// Rule inputs. Source functions are usually measures (distributions); rule
// outputs are then measures too, except for coordinated conditionalization,
// whose output is computed formula by formula.

// p*(A) = p(A | B).
struct BayesSpec {
  ProbabilityFunction p;
  Formula B;
};

// p*(A) = sum_i p(A | B_i) w_i.
struct JeffreySpec {
  ProbabilityFunction p;
  std::vector<std::pair<Formula, Rational>> cells;
};

// p*_x(A) = p_y(B | A) p_x(A) / p_z(B).
struct CoordSpec {
  ProbabilityFunction px, py, pz;
  Formula B;
};

// p*_x(A) = p_y(A | B1).
struct CoordBayesSpec {
  ProbabilityFunction py, pz;
  Formula B1, B2;
};

// p*_x(A) = sum_i p_y(A | B_i) p*_z(B_i).
struct CoordJeffreySpec {
  ProbabilityFunction py, pz_star;
  std::vector<Formula> cells;
};

// Lab y's conditionals p_y(B_i | A1) move to new_b1, new_b2;
// p*_x(C) = k1 p_z(A1 & B1 & C) + k2 p_z(A1 & B2 & C) + p_z(A2 & C) with
// k_i = new_bi / p_y(B_i | A1).
struct AdamsSpec {
  ProbabilityFunction py, pz;
  Formula A1, A2, B1, B2;
  Rational new_b1, new_b2;
};

using UpdateSpec = std::variant<BayesSpec, JeffreySpec, CoordSpec, CoordBayesSpec, CoordJeffreySpec, AdamsSpec>;

// "bayes", "jeffrey", "coord", "coord-bayes", "coord-jeffrey", "adams".
std::string rule_name(const UpdateSpec& spec);

// Each rule throws PreconditionError (UndefinedConditional for a zero
// denominator) naming the failed precondition.
ProbabilityFunction bayes_update(const ProbabilityFunction& p, const Formula& B);
ProbabilityFunction jeffrey_update(const ProbabilityFunction& p, const std::vector<std::pair<Formula, Rational>>& cells);
// p*_x(A) := 0 when p_x(A) = 0 or p_y(A) = 0.
ProbabilityFunction coord_conditionalize(const ProbabilityFunction& px, const ProbabilityFunction& py,
                                         const ProbabilityFunction& pz, const Formula& B);
ProbabilityFunction coord_bayes_update(const ProbabilityFunction& py, const ProbabilityFunction& pz, const Formula& B1,
                                       const Formula& B2);
ProbabilityFunction coord_jeffrey_update(const ProbabilityFunction& py, const ProbabilityFunction& pz_star,
                                         const std::vector<Formula>& cells);
ProbabilityFunction adams_update(const ProbabilityFunction& py, const Rational& new_b1, const Rational& new_b2,
                                 const ProbabilityFunction& pz, const Formula& A1, const Formula& A2,
                                 const Formula& B1, const Formula& B2);

ProbabilityFunction apply_update(const UpdateSpec& spec);

// The formulas a characterization check quantifies over, given the
// caller's base formulas: the base, the rule's cells, and every meet and
// join of a base formula with a cell.
std::vector<Formula> characterization_range(const UpdateSpec& spec, const std::vector<Formula>& base);

// Every formula the check evaluates the candidate on (the range above plus
// the meets needed for conditionals). Tabulate a candidate on this to get a
// table the check accepts.
std::vector<Formula> characterization_domain(const UpdateSpec& spec, const std::vector<Formula>& base);

struct CharacterizationReport {
  bool holds = true;
  std::vector<std::string> failed;  // condition names, in check order
};

// Evaluates the characterization conditions of the rule (for bayes and
// jeffrey: the defining equation itself) on a candidate update, with
// "for all propositions" read over characterization_range(spec, base).
// Except for coordinated conditionalization, the candidate must also
// satisfy the probability axioms on characterization_domain ("axioms").
// Throws PreconditionError when the theorem's hypotheses fail for `spec`,
// and EvalError when a table candidate misses a needed formula.
CharacterizationReport check_characterization(const UpdateSpec& spec, const ProbabilityFunction& candidate,
                                              const std::vector<Formula>& base);

}  // namespace lablogic

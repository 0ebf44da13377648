#pragma once

#include <bitset>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lablogic/formula.hpp"
#include "lablogic/frame.hpp"

namespace lablogic {

// Metavariable name (A, B or C) to formula.
using Substitution = std::map<std::string, Formula, std::less<>>;

struct AxiomSchema {
  int number;         // 1..16
  std::string id;     // "A1".."A16"
  Formula pattern;    // atoms A, B, C are metavariables
};

// Every schema form in A1..A16 order. Schemas with two forms (A2, A3, A7,
// A8, A9) contribute two entries sharing an id.
const std::vector<AxiomSchema>& axiom_schemas();

// Replaces metavariables in `pattern`. Throws PreconditionError when one is
// unbound.
Formula instantiate(const Formula& pattern, const Substitution& s);

// Which optional axioms (A12..A16) are in play. A1..A11 and R1..R6 always are.
class LogicConfig {
 public:
  LogicConfig() = default;
  static LogicConfig all();
  // The axioms sound over frames with the given conditions:
  // vi-A12, vii-A13, viii-A14, ix-A15, x-A16.
  static LogicConfig for_conditions(const ConditionSet& c);

  // Throws PreconditionError unless 12 <= number <= 16.
  LogicConfig& enable(int number);
  bool enabled(int number) const;

 private:
  std::bitset<5> optional_;
};

struct AxiomMatch {
  std::string id;
  Substitution substitution;
};

// First enabled schema (in A1..A16 order) that `f` instantiates.
std::optional<AxiomMatch> match_axiom(const Formula& f, const LogicConfig& cfg = {});

// Matches `f` against one pattern; repeated metavariables must bind equal
// formulas.
std::optional<Substitution> match_pattern(const Formula& pattern, const Formula& f);

struct Justification {
  enum class Kind { Axiom, Rule };
  Kind kind;
  std::string id;                      // "A3", "R1", ...
  std::vector<std::size_t> premises;   // 1-based line numbers (rules only)
};

struct ProofLine {
  Formula formula;
  Justification justification;
};

using Proof = std::vector<ProofLine>;

struct ProofCheck {
  bool accepted = true;
  std::size_t line = 0;  // 1-based; 0 when accepted
  std::string reason;
};

// Accepts iff every line is an instance of the cited enabled schema, or a
// structurally exact application of the cited rule to earlier lines:
//   R1  A, A -> B / B               (premises in either order)
//   R2  A, B / A & B
//   R3  A -> B / (C -> A) -> (C -> B)
//   R4  A -> B / (B -> C) -> (A -> C)
//   R5  A -> B / ~(A -> C) -> ~(B -> C)
//   R6  ~A -> ~B / ~(C -> A) -> ~(C -> B)
// An empty proof is rejected at line 0.
ProofCheck check_proof(const Proof& proof, const LogicConfig& cfg = {});

// One line per proof step:
//   [N] formula ; AXIOM Ak
//   [N] formula ; RULE Rk FROM i[,j]
// Blank lines and text after '#' are ignored. A leading line number, when
// present, must equal the step's position. Throws FormatError or ParseError.
Proof parse_proof(std::string_view text);

std::string render(const Proof& proof);

// { C : (A -> C) in X and A in Y for some A }.
std::set<Formula> conditional_image(const std::set<Formula>& X, const std::set<Formula>& Y);

// { ~(A -> C) : A in X and ~C in Y }.
std::set<Formula> refutation_product(const std::set<Formula>& X, const std::set<Formula>& Y);

}  // namespace lablogic

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lablogic/formula.hpp"
#include "lablogic/probability.hpp"
#include "lablogic/rational.hpp"
#include "lablogic/truth.hpp"

namespace lablogic {

enum class BetKind { Plain, Conditional, Reversed, ReversedConditional };

std::string_view to_string(BetKind k);
// "plain", "conditional", "reversed", "reversed-conditional".
BetKind parse_bet_kind(std::string_view s);

// A bet at quotient p with signed stake S. A plain bet pays the bettor
// (1 - p)S when the target is designated and -pS otherwise; a reversed bet
// swaps the two payoffs' roles. Conditional bets are void (gain 0) unless
// the condition is designated.
struct Bet {
  BetKind kind = BetKind::Plain;
  Formula target;
  std::optional<Formula> condition;
  Rational quotient;
  Rational stake;

  static Bet plain(Formula target, Rational quotient, Rational stake);
  static Bet conditional(Formula target, Formula condition, Rational quotient, Rational stake);
  static Bet reversed(Formula target, Rational quotient, Rational stake);
  static Bet reversed_conditional(Formula target, Formula condition, Rational quotient, Rational stake);

  bool is_conditional() const noexcept {
    return kind == BetKind::Conditional || kind == BetKind::ReversedConditional;
  }
  // Throws FormatError unless a condition is present exactly for the
  // conditional kinds, or when a formula contains ->.
  void validate() const;
};

// Bettor's gain on one outcome. Throws EvalError on an unbound atom.
Rational bet_gain(const Bet& b, const Assignment& a);

// Net bettor gain on every assignment to the bets' atoms, in enumeration
// order.
struct GainProfile {
  std::vector<std::string> atoms;
  std::vector<std::pair<Assignment, Rational>> gains;

  Rational max() const;
  Rational min() const;
};

// For an empty family: one empty assignment with gain 0.
GainProfile net_gain_profile(const std::vector<Bet>& bets);

struct DutchBookResult {
  bool dutch_book;
  Rational max_gain;  // strictly negative iff dutch_book
  Rational min_gain;
};

DutchBookResult is_dutch_book(const std::vector<Bet>& bets);

// Descriptors for the stake recipes. Each records the quotients involved.
namespace violation {
// A quotient outside [0, 1].
struct Range {
  Formula A;
  Rational p;
};
// Two quotients on the same proposition.
struct TwoQuotient {
  Formula A;
  Rational p, q;
};
// A |= B with q(A) = p > q = q(B).
struct Monotonicity {
  Formula A, B;
  Rational p, q;
};
// q(A) = p, q(B) = q, q(A&B) = r, q(A|B) = s with p + q != r + s.
struct Additivity {
  Formula A, B;
  Rational p, q, r, s;
};
// q(B) = p, q(A&B) = q, q(A|B) conditional = r with pr != q.
struct Conditional {
  Formula A, B;
  Rational p, q, r;
};
// As Conditional, but r is the announced quotient for A after learning B.
// Requires p > q > 0 and r != q/p.
struct Diachronic {
  Formula A, B;
  Rational p, q, r;
};
}  // namespace violation

using ViolationDescriptor = std::variant<violation::Range, violation::TwoQuotient, violation::Monotonicity,
                                         violation::Additivity, violation::Conditional, violation::Diachronic>;

// Which axiom the descriptor concerns: "i", "ii", "iii", "iv", "diachronic".
std::string axiom_of(const ViolationDescriptor& v);
std::string describe(const ViolationDescriptor& v);

// The explicit stakes from the Dutch-book proofs. |S| is the stake scale;
// its sign is chosen by the recipe. Throws PreconditionError when the
// quotients do not violate the named axiom or scale is zero.
std::vector<Bet> construct_violation_stakes(const ViolationDescriptor& v, const Rational& scale = 1);

// Announced betting quotients, keyed by formula, plus conditional quotients.
struct QuoteBook {
  std::map<Formula, Rational> quotients;
  std::vector<ConditionalValue> conditional;
};

// First violated axiom in the order i, ii, iii, iv.
std::optional<ViolationDescriptor> find_quote_violation(const QuoteBook& quotes);

// Sum over the distribution of mass times net gain. Throws EvalError when
// a bet mentions an atom outside the distribution.
Rational expected_net_gain(const StateDistribution& d, const std::vector<Bet>& bets);

}  // namespace lablogic

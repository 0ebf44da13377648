#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lablogic/formula.hpp"

namespace lablogic {

// An element of P({T, F}): the four Belnap-Dunn values.
struct TruthValue {
  bool t = false;
  bool f = false;

  static constexpr TruthValue neither() { return {false, false}; }
  static constexpr TruthValue true_only() { return {true, false}; }
  static constexpr TruthValue false_only() { return {false, true}; }
  static constexpr TruthValue both() { return {true, true}; }

  // {T} and {T,F} are designated.
  constexpr bool designated() const { return t; }

  // N=0, T=1, F=2, TF=3. This is also the enumeration order everywhere.
  constexpr std::uint8_t code() const { return static_cast<std::uint8_t>((t ? 1 : 0) | (f ? 2 : 0)); }
  static constexpr TruthValue from_code(unsigned c) { return {(c & 1U) != 0, (c & 2U) != 0}; }

  friend constexpr bool operator==(TruthValue, TruthValue) = default;
};

constexpr TruthValue negate(TruthValue a) { return {a.f, a.t}; }
constexpr TruthValue meet(TruthValue a, TruthValue b) { return {a.t && b.t, a.f || b.f}; }
constexpr TruthValue join(TruthValue a, TruthValue b) { return {a.t || b.t, a.f && b.f}; }

// Serialization tokens "N", "T", "F", "TF".
std::string_view to_token(TruthValue v);
// Throws FormatError on an unknown token.
TruthValue parse_truth_value(std::string_view token);

// Four-valued valuation of atoms.
using Assignment = std::map<std::string, TruthValue, std::less<>>;

// Evaluates a conditional-free formula. Throws EvalError on an unbound atom
// or on an implication.
TruthValue eval_formula(const Assignment& a, const Formula& f);

// Visits all 4^n assignments to `atoms` in lexicographic order (first atom
// most significant, values in code order). Stops early if `visit` returns false.
void for_each_assignment(const std::vector<std::string>& atoms, const std::function<bool(const Assignment&)>& visit);

// A |= B in the conditional-free fragment: every assignment that designates
// A designates B. Exhaustive over 4^n assignments. Throws EvalError on ->.
bool fde_entails(const Formula& premise, const Formula& conclusion);

// First assignment (in enumeration order) designating `premise` but not
// `conclusion`, if any.
std::optional<Assignment> fde_counterexample(const Formula& premise, const Formula& conclusion);

std::string render(const Assignment& a);

}  // namespace lablogic

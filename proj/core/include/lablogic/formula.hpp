#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lablogic {

enum class Connective : unsigned char { Atom, Not, And, Or, Imp };

// Immutable propositional formula over atoms with ~, &, |, ->.
//
// Values share structure; copying is a reference-count bump. Equality and
// ordering are structural, so formulas can key ordered containers.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula negation(Formula sub);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula antecedent, Formula consequent);

  Connective kind() const noexcept { return node_->kind; }
  bool is_atom() const noexcept { return kind() == Connective::Atom; }
  bool is_negation() const noexcept { return kind() == Connective::Not; }
  bool is_conjunction() const noexcept { return kind() == Connective::And; }
  bool is_disjunction() const noexcept { return kind() == Connective::Or; }
  bool is_implication() const noexcept { return kind() == Connective::Imp; }

  // Pre: is_atom().
  const std::string& name() const;
  // Operand of a negation. Pre: is_negation().
  Formula operand() const;
  // Pre: binary connective.
  Formula left() const;
  Formula right() const;

  // Atom depth 0; each connective adds one.
  int depth() const noexcept { return node_->depth; }
  std::size_t hash() const noexcept { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node {
    Connective kind;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    std::size_t hash;
    int depth;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula binary(Connective kind, Formula left, Formula right);
  static bool equal(const Node* a, const Node* b) noexcept;
  static std::strong_ordering compare(const Node* a, const Node* b) noexcept;

  std::shared_ptr<const Node> node_;
};

// Short builders.
inline Formula atom(std::string name) { return Formula::atom(std::move(name)); }
inline Formula neg(Formula f) { return Formula::negation(std::move(f)); }
inline Formula conj(Formula a, Formula b) { return Formula::conjunction(std::move(a), std::move(b)); }
inline Formula disj(Formula a, Formula b) { return Formula::disjunction(std::move(a), std::move(b)); }
inline Formula imp(Formula a, Formula b) { return Formula::implication(std::move(a), std::move(b)); }

// Left-nested conjunction / disjunction of a non-empty list.
Formula conj_all(const std::vector<Formula>& fs);
Formula disj_all(const std::vector<Formula>& fs);

bool is_valid_atom_name(std::string_view name) noexcept;

// Distinct atom names, sorted.
std::set<std::string> atoms_of(const Formula& f);
std::set<std::string> atoms_of(const std::vector<Formula>& fs);

bool contains_implication(const Formula& f) noexcept;

// Grammar:
//   formula := imp
//   imp     := or ("->" imp)?
//   or      := and ("|" and)*
//   and     := neg ("&" neg)*
//   neg     := "~" neg | atom | "(" formula ")"
// Also accepts the Unicode connectives ¬ ∧ ∨ →.
// Throws ParseError with the byte offset and the expected-token set.
Formula parse(std::string_view text);

// Minimal-parentheses rendering; parse(render(f)) == f.
std::string render(const Formula& f);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

}  // namespace lablogic

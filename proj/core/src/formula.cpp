#include "lablogic/formula.hpp"

#include <algorithm>
#include <cctype>

#include "lablogic/errors.hpp"

namespace lablogic {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) throw PreconditionError("invalid atom name \"" + name + "\"");
  auto h = mix(static_cast<std::size_t>(Connective::Atom), std::hash<std::string>{}(name));
  return Formula(std::make_shared<const Node>(Node{Connective::Atom, std::move(name), nullptr, nullptr, h, 0}));
}

Formula Formula::negation(Formula sub) {
  auto h = mix(static_cast<std::size_t>(Connective::Not), sub.hash());
  int d = sub.depth() + 1;
  return Formula(std::make_shared<const Node>(Node{Connective::Not, {}, std::move(sub.node_), nullptr, h, d}));
}

Formula Formula::binary(Connective kind, Formula left, Formula right) {
  auto h = mix(mix(static_cast<std::size_t>(kind), left.hash()), right.hash());
  int d = std::max(left.depth(), right.depth()) + 1;
  return Formula(std::make_shared<const Node>(Node{kind, {}, std::move(left.node_), std::move(right.node_), h, d}));
}

Formula Formula::conjunction(Formula left, Formula right) {
  return binary(Connective::And, std::move(left), std::move(right));
}
Formula Formula::disjunction(Formula left, Formula right) {
  return binary(Connective::Or, std::move(left), std::move(right));
}
Formula Formula::implication(Formula antecedent, Formula consequent) {
  return binary(Connective::Imp, std::move(antecedent), std::move(consequent));
}

const std::string& Formula::name() const {
  if (!is_atom()) throw std::logic_error("Formula::name on a compound formula");
  return node_->name;
}

Formula Formula::operand() const {
  if (!is_negation()) throw std::logic_error("Formula::operand on a non-negation");
  return Formula(node_->lhs);
}

Formula Formula::left() const {
  if (!node_->rhs) throw std::logic_error("Formula::left on a non-binary formula");
  return Formula(node_->lhs);
}

Formula Formula::right() const {
  if (!node_->rhs) throw std::logic_error("Formula::right on a non-binary formula");
  return Formula(node_->rhs);
}

bool Formula::equal(const Node* a, const Node* b) noexcept {
  if (a == b) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->depth != b->depth) return false;
  switch (a->kind) {
    case Connective::Atom:
      return a->name == b->name;
    case Connective::Not:
      return equal(a->lhs.get(), b->lhs.get());
    default:
      return equal(a->lhs.get(), b->lhs.get()) && equal(a->rhs.get(), b->rhs.get());
  }
}

std::strong_ordering Formula::compare(const Node* a, const Node* b) noexcept {
  if (a == b) return std::strong_ordering::equal;
  if (a->kind != b->kind) return a->kind <=> b->kind;
  switch (a->kind) {
    case Connective::Atom:
      return a->name.compare(b->name) <=> 0;
    case Connective::Not:
      return compare(a->lhs.get(), b->lhs.get());
    default:
      if (auto c = compare(a->lhs.get(), b->lhs.get()); c != 0) return c;
      return compare(a->rhs.get(), b->rhs.get());
  }
}

bool operator==(const Formula& a, const Formula& b) noexcept { return Formula::equal(a.node_.get(), b.node_.get()); }

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  return Formula::compare(a.node_.get(), b.node_.get());
}

Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) throw PreconditionError("conjunction of an empty list");
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = conj(out, fs[i]);
  return out;
}

Formula disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) throw PreconditionError("disjunction of an empty list");
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = disj(out, fs[i]);
  return out;
}

bool is_valid_atom_name(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::Atom:
      out.insert(f.name());
      return;
    case Connective::Not:
      collect_atoms(f.operand(), out);
      return;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}

}  // namespace

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::set<std::string> atoms_of(const std::vector<Formula>& fs) {
  std::set<std::string> out;
  for (const auto& f : fs) collect_atoms(f, out);
  return out;
}

bool contains_implication(const Formula& f) noexcept {
  switch (f.kind()) {
    case Connective::Atom:
      return false;
    case Connective::Not:
      return contains_implication(f.operand());
    case Connective::Imp:
      return true;
    default:
      return contains_implication(f.left()) || contains_implication(f.right());
  }
}

}  // namespace lablogic

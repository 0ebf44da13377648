#include "lablogic/proof.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lablogic/errors.hpp"

namespace lablogic {

namespace {

bool is_metavariable(const Formula& f) {
  return f.is_atom() && (f.name() == "A" || f.name() == "B" || f.name() == "C");
}

bool match_into(const Formula& pattern, const Formula& f, Substitution& s) {
  if (is_metavariable(pattern)) {
    auto [it, inserted] = s.emplace(pattern.name(), f);
    return inserted || it->second == f;
  }
  if (pattern.kind() != f.kind()) return false;
  switch (pattern.kind()) {
    case Connective::Atom:
      return pattern.name() == f.name();
    case Connective::Not:
      return match_into(pattern.operand(), f.operand(), s);
    default:
      return match_into(pattern.left(), f.left(), s) && match_into(pattern.right(), f.right(), s);
  }
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

const std::vector<AxiomSchema>& axiom_schemas() {
  static const std::vector<AxiomSchema> schemas = [] {
    const std::vector<std::pair<int, const char*>> table = {
        {1, "A -> A"},
        {2, "A -> A | B"},
        {2, "B -> A | B"},
        {3, "A & B -> A"},
        {3, "A & B -> B"},
        {4, "(A -> C) & (B -> C) -> (A | B -> C)"},
        {5, "(A -> B) & (A -> C) -> (A -> B & C)"},
        {6, "A & (B | C) -> A & B | C"},
        {7, "~(A | B) -> ~A & ~B"},
        {7, "~A & ~B -> ~(A | B)"},
        {8, "~(A & B) -> ~A | ~B"},
        {8, "~A | ~B -> ~(A & B)"},
        {9, "A -> ~~A"},
        {9, "~~A -> A"},
        {10, "~(A | B -> C) -> ~(A -> C) | ~(B -> C)"},
        {11, "~(A -> B & C) -> ~(A -> B) | ~(A -> C)"},
        {12, "A & (A -> B) -> B"},
        {13, "A & ~B -> ~(A -> B)"},
        {14, "(A -> B) & (B -> C) -> (A -> C)"},
        {15, "(A -> B) & ~(A -> C) -> ~(B -> C)"},
        {16, "(~A -> ~B) & ~(C -> A) -> ~(C -> B)"},
    };
    std::vector<AxiomSchema> out;
    for (const auto& [n, text] : table) out.push_back({n, "A" + std::to_string(n), parse(text)});
    return out;
  }();
  return schemas;
}

Formula instantiate(const Formula& pattern, const Substitution& s) {
  if (is_metavariable(pattern)) {
    auto it = s.find(pattern.name());
    if (it == s.end()) throw PreconditionError("metavariable " + pattern.name() + " is unbound");
    return it->second;
  }
  switch (pattern.kind()) {
    case Connective::Atom:
      return pattern;
    case Connective::Not:
      return neg(instantiate(pattern.operand(), s));
    case Connective::And:
      return conj(instantiate(pattern.left(), s), instantiate(pattern.right(), s));
    case Connective::Or:
      return disj(instantiate(pattern.left(), s), instantiate(pattern.right(), s));
    case Connective::Imp:
      return imp(instantiate(pattern.left(), s), instantiate(pattern.right(), s));
  }
  throw PreconditionError("unreachable connective");
}

LogicConfig LogicConfig::all() {
  LogicConfig c;
  for (int n = 12; n <= 16; ++n) c.enable(n);
  return c;
}

LogicConfig LogicConfig::for_conditions(const ConditionSet& conditions) {
  LogicConfig c;
  const std::pair<Condition, int> map[] = {
      {Condition::VI, 12}, {Condition::VII, 13}, {Condition::VIII, 14}, {Condition::IX, 15}, {Condition::X, 16}};
  for (const auto& [cond, n] : map)
    if (conditions.contains(cond)) c.enable(n);
  return c;
}

LogicConfig& LogicConfig::enable(int number) {
  if (number < 12 || number > 16) throw PreconditionError("only A12..A16 are optional");
  optional_.set(static_cast<std::size_t>(number - 12));
  return *this;
}

bool LogicConfig::enabled(int number) const {
  if (number >= 1 && number <= 11) return true;
  if (number >= 12 && number <= 16) return optional_.test(static_cast<std::size_t>(number - 12));
  return false;
}

std::optional<Substitution> match_pattern(const Formula& pattern, const Formula& f) {
  Substitution s;
  if (match_into(pattern, f, s)) return s;
  return std::nullopt;
}

std::optional<AxiomMatch> match_axiom(const Formula& f, const LogicConfig& cfg) {
  for (const auto& schema : axiom_schemas()) {
    if (!cfg.enabled(schema.number)) continue;
    if (auto s = match_pattern(schema.pattern, f)) return AxiomMatch{schema.id, std::move(*s)};
  }
  return std::nullopt;
}

namespace {

// Empty string when the step is correct, otherwise the reason.
std::string check_rule(const std::string& id, const Formula& conclusion, const std::vector<Formula>& p) {
  auto need = [&](std::size_t k) -> std::string {
    if (p.size() != k) return id + " takes " + std::to_string(k) + (k == 1 ? " premise" : " premises");
    return {};
  };
  if (id == "R1") {
    if (auto e = need(2); !e.empty()) return e;
    for (int order = 0; order < 2; ++order) {
      const Formula& minor = order == 0 ? p[0] : p[1];
      const Formula& major = order == 0 ? p[1] : p[0];
      if (major.is_implication() && major.left() == minor && major.right() == conclusion) return {};
    }
    return "not modus ponens on the cited lines";
  }
  if (id == "R2") {
    if (auto e = need(2); !e.empty()) return e;
    if (conclusion.is_conjunction() && conclusion.left() == p[0] && conclusion.right() == p[1]) return {};
    return "not the adjunction of the cited lines";
  }
  if (id == "R3" || id == "R4" || id == "R5" || id == "R6") {
    if (auto e = need(1); !e.empty()) return e;
    const Formula& prem = p[0];
    if (!prem.is_implication()) return id + " needs a conditional premise";
    Formula a = prem.left();
    Formula b = prem.right();
    if (id == "R6") {
      if (!a.is_negation() || !b.is_negation()) return "R6 needs a premise of the form ~A -> ~B";
      a = a.operand();
      b = b.operand();
    }
    if (!conclusion.is_implication()) return "conclusion is not a conditional";
    const Formula lhs = conclusion.left();
    const Formula rhs = conclusion.right();
    bool ok = false;
    if (id == "R3") {
      // (C -> A) -> (C -> B)
      ok = lhs.is_implication() && rhs.is_implication() && lhs.left() == rhs.left() && lhs.right() == a &&
           rhs.right() == b;
    } else if (id == "R4") {
      // (B -> C) -> (A -> C)
      ok = lhs.is_implication() && rhs.is_implication() && lhs.right() == rhs.right() && lhs.left() == b &&
           rhs.left() == a;
    } else {
      if (lhs.is_negation() && rhs.is_negation() && lhs.operand().is_implication() &&
          rhs.operand().is_implication()) {
        const Formula l = lhs.operand();
        const Formula r = rhs.operand();
        if (id == "R5") {
          // ~(A -> C) -> ~(B -> C)
          ok = l.right() == r.right() && l.left() == a && r.left() == b;
        } else {
          // ~(C -> A) -> ~(C -> B)
          ok = l.left() == r.left() && l.right() == a && r.right() == b;
        }
      }
    }
    return ok ? std::string{} : "not an application of " + id + " to the cited line";
  }
  return "unknown rule " + id;
}

}  // namespace

ProofCheck check_proof(const Proof& proof, const LogicConfig& cfg) {
  if (proof.empty()) return {false, 0, "empty proof"};
  for (std::size_t i = 0; i < proof.size(); ++i) {
    const std::size_t line = i + 1;
    const auto& [formula, just] = proof[i];
    if (just.kind == Justification::Kind::Axiom) {
      bool known = false;
      bool matched = false;
      for (const auto& schema : axiom_schemas()) {
        if (schema.id != just.id) continue;
        known = true;
        if (!cfg.enabled(schema.number)) return {false, line, "axiom " + just.id + " is not enabled"};
        if (match_pattern(schema.pattern, formula)) {
          matched = true;
          break;
        }
      }
      if (!known) return {false, line, "unknown axiom " + just.id};
      if (!matched) return {false, line, "not an instance of " + just.id};
      continue;
    }
    std::vector<Formula> premises;
    for (auto ref : just.premises) {
      if (ref == 0 || ref >= line) {
        return {false, line, "premise reference " + std::to_string(ref) + " is not an earlier line"};
      }
      premises.push_back(proof[ref - 1].formula);
    }
    if (auto reason = check_rule(just.id, formula, premises); !reason.empty()) return {false, line, reason};
  }
  return {};
}

Proof parse_proof(std::string_view text) {
  Proof proof;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t source_line = 0;
  auto fail = [&](const std::string& msg) {
    throw FormatError("proof line " + std::to_string(source_line) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++source_line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    std::size_t pos = 0;
    if (std::isdigit(static_cast<unsigned char>(line[0]))) {
      while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
      const auto number = std::stoul(line.substr(0, pos));
      if (number != proof.size() + 1) fail("expected step number " + std::to_string(proof.size() + 1));
      if (pos < line.size() && (line[pos] == '.' || line[pos] == ')')) ++pos;
    }
    const auto semi = line.find(';', pos);
    if (semi == std::string::npos) fail("missing ';' before the justification");
    const Formula formula = parse(trim(std::string_view(line).substr(pos, semi - pos)));

    std::istringstream just(line.substr(semi + 1));
    std::string kind;
    std::string id;
    just >> kind >> id;
    Justification j{};
    if (kind == "AXIOM") {
      j.kind = Justification::Kind::Axiom;
      j.id = id;
    } else if (kind == "RULE") {
      j.kind = Justification::Kind::Rule;
      j.id = id;
      std::string from;
      just >> from;
      if (from != "FROM") fail("expected FROM after the rule id");
      std::string refs;
      std::getline(just, refs);
      std::istringstream list(refs);
      std::string item;
      while (std::getline(list, item, ',')) {
        item = trim(item);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          fail("bad premise reference \"" + item + "\"");
        j.premises.push_back(std::stoul(item));
      }
      if (j.premises.empty()) fail("rule without premises");
    } else {
      fail("justification must start with AXIOM or RULE");
    }
    if (id.empty()) fail("missing axiom or rule id");
    proof.push_back({formula, std::move(j)});
  }
  return proof;
}

std::string render(const Proof& proof) {
  std::ostringstream os;
  for (std::size_t i = 0; i < proof.size(); ++i) {
    const auto& [f, j] = proof[i];
    os << (i + 1) << ' ' << render(f) << " ; ";
    if (j.kind == Justification::Kind::Axiom) {
      os << "AXIOM " << j.id;
    } else {
      os << "RULE " << j.id << " FROM ";
      for (std::size_t k = 0; k < j.premises.size(); ++k) os << (k ? "," : "") << j.premises[k];
    }
    os << '\n';
  }
  return os.str();
}

std::set<Formula> conditional_image(const std::set<Formula>& X, const std::set<Formula>& Y) {
  std::set<Formula> out;
  for (const auto& f : X)
    if (f.is_implication() && Y.count(f.left())) out.insert(f.right());
  return out;
}

std::set<Formula> refutation_product(const std::set<Formula>& X, const std::set<Formula>& Y) {
  std::set<Formula> out;
  for (const auto& a : X)
    for (const auto& g : Y)
      if (g.is_negation()) out.insert(neg(imp(a, g.operand())));
  return out;
}

}  // namespace lablogic

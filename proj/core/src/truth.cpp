#include "lablogic/truth.hpp"

#include "lablogic/errors.hpp"

namespace lablogic {

std::string_view to_token(TruthValue v) {
  static constexpr std::string_view tokens[] = {"N", "T", "F", "TF"};
  return tokens[v.code()];
}

TruthValue parse_truth_value(std::string_view token) {
  if (token == "N") return TruthValue::neither();
  if (token == "T") return TruthValue::true_only();
  if (token == "F") return TruthValue::false_only();
  if (token == "TF" || token == "FT") return TruthValue::both();
  throw FormatError("unknown truth value \"" + std::string(token) + "\" (expected N, T, F or TF)");
}

TruthValue eval_formula(const Assignment& a, const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom: {
      auto it = a.find(f.name());
      if (it == a.end()) throw EvalError("unbound atom \"" + f.name() + "\"");
      return it->second;
    }
    case Connective::Not:
      return negate(eval_formula(a, f.operand()));
    case Connective::And:
      return meet(eval_formula(a, f.left()), eval_formula(a, f.right()));
    case Connective::Or:
      return join(eval_formula(a, f.left()), eval_formula(a, f.right()));
    case Connective::Imp:
      throw EvalError("conditional \"" + render(f) + "\" has no value under a bare assignment; evaluate it in a model");
  }
  throw EvalError("unreachable connective");
}

void for_each_assignment(const std::vector<std::string>& atoms,
                         const std::function<bool(const Assignment&)>& visit) {
  Assignment a;
  for (const auto& name : atoms) a[name] = TruthValue::neither();
  std::vector<unsigned> digits(atoms.size(), 0);
  while (true) {
    if (!visit(a)) return;
    // Increment the base-4 counter, last atom least significant.
    std::size_t i = atoms.size();
    while (i > 0) {
      --i;
      if (++digits[i] < 4) {
        a[atoms[i]] = TruthValue::from_code(digits[i]);
        break;
      }
      digits[i] = 0;
      a[atoms[i]] = TruthValue::neither();
      if (i == 0) return;
    }
    if (atoms.empty()) return;
  }
}

std::optional<Assignment> fde_counterexample(const Formula& premise, const Formula& conclusion) {
  if (contains_implication(premise) || contains_implication(conclusion)) {
    throw EvalError("first-degree entailment is defined on conditional-free formulas only");
  }
  auto names = atoms_of(std::vector<Formula>{premise, conclusion});
  std::vector<std::string> atoms(names.begin(), names.end());
  std::optional<Assignment> witness;
  for_each_assignment(atoms, [&](const Assignment& a) {
    if (eval_formula(a, premise).designated() && !eval_formula(a, conclusion).designated()) {
      witness = a;
      return false;
    }
    return true;
  });
  return witness;
}

bool fde_entails(const Formula& premise, const Formula& conclusion) {
  return !fde_counterexample(premise, conclusion).has_value();
}

std::string render(const Assignment& a) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, v] : a) {
    if (!first) out += ", ";
    first = false;
    out += name;
    out += '=';
    out += to_token(v);
  }
  out += '}';
  return out;
}

}  // namespace lablogic

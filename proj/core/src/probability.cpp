#include "lablogic/probability.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>
#include <variant>

#include "lablogic/errors.hpp"

namespace lablogic {

namespace {

std::vector<unsigned> codes_of(const std::vector<std::string>& atoms, const Assignment& a) {
  std::vector<unsigned> out;
  out.reserve(atoms.size());
  for (const auto& name : atoms) out.push_back(a.at(name).code());
  return out;
}

// Validates the shape of each assignment and returns the entries sorted in
// enumeration order, zero masses removed.
std::vector<WeightedAssignment> normalize_entries(const std::vector<std::string>& atoms,
                                                  std::vector<WeightedAssignment> entries) {
  std::map<std::vector<unsigned>, std::size_t> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& [a, m] = entries[i];
    if (a.size() != atoms.size() ||
        !std::all_of(atoms.begin(), atoms.end(), [&](const std::string& n) { return a.count(n) == 1; })) {
      throw FormatError("assignment " + render(a) + " is not total on exactly the declared atoms");
    }
    if (m < 0) throw PreconditionError("negative mass " + to_string(m) + " on " + render(a));
    if (!seen.emplace(codes_of(atoms, a), i).second) throw FormatError("assignment " + render(a) + " listed twice");
  }
  std::vector<WeightedAssignment> out;
  for (const auto& [codes, i] : seen)
    if (entries[i].second != 0) out.push_back(std::move(entries[i]));
  return out;
}

std::vector<std::string> checked_atoms(std::vector<std::string> atoms) {
  std::set<std::string> unique;
  for (const auto& a : atoms) {
    if (!is_valid_atom_name(a)) throw FormatError("invalid atom name \"" + a + "\"");
    if (!unique.insert(a).second) throw FormatError("atom \"" + a + "\" declared twice");
  }
  return atoms;
}

Rational measure_of(const std::vector<WeightedAssignment>& masses, const Formula& f) {
  Rational total = 0;
  for (const auto& [a, m] : masses)
    if (eval_formula(a, f).designated()) total += m;
  return total;
}

}  // namespace

StateDistribution::StateDistribution(std::vector<std::string> atoms, std::vector<WeightedAssignment> masses)
    : atoms_(checked_atoms(std::move(atoms))), support_(normalize_entries(atoms_, std::move(masses))) {
  Rational total = 0;
  for (const auto& [a, m] : support_) {
    if (m > 1) throw PreconditionError("mass " + to_string(m) + " exceeds 1");
    total += m;
  }
  if (total != 1) throw PreconditionError("masses sum to " + to_string(total) + ", not 1");
}

StateDistribution StateDistribution::from_weights(std::vector<std::string> atoms,
                                                  std::vector<WeightedAssignment> weights) {
  StateDistribution d;
  d.atoms_ = checked_atoms(std::move(atoms));
  d.support_ = normalize_entries(d.atoms_, std::move(weights));
  Rational total = 0;
  for (const auto& [a, w] : d.support_) total += w;
  if (total <= 0) throw PreconditionError("weights must have a positive total");
  for (auto& [a, w] : d.support_) w /= total;
  return d;
}

StateDistribution StateDistribution::uniform(std::vector<std::string> atoms) {
  std::vector<WeightedAssignment> entries;
  for_each_assignment(atoms, [&](const Assignment& a) {
    entries.emplace_back(a, Rational(1));
    return true;
  });
  return from_weights(std::move(atoms), std::move(entries));
}

Rational StateDistribution::mass(const Assignment& a) const {
  for (const auto& [b, m] : support_)
    if (b == a) return m;
  return 0;
}

Rational induced_probability(const StateDistribution& d, const Formula& f) {
  if (contains_implication(f)) throw EvalError("probabilities are defined on conditional-free formulas only");
  const std::set<std::string> declared(d.atoms().begin(), d.atoms().end());
  for (const auto& a : atoms_of(f))
    if (!declared.count(a)) throw EvalError("unbound atom \"" + a + "\"");
  return measure_of(d.support(), f);
}

ProbabilityAssignment::ProbabilityAssignment(FormulaValues values) : values_(std::move(values)) {
  for (const auto& [f, v] : values_) {
    if (v < 0 || v > 1) throw PreconditionError("p(" + render(f) + ") = " + to_string(v) + " is outside [0, 1]");
  }
}

namespace {
constexpr std::size_t kJointEnumerationAtoms = 6;
}  // namespace

ProbabilityValidator::ProbabilityValidator(std::vector<Formula> domain, ValidateOptions options)
    : domain_(std::move(domain)), options_(std::move(options)) {
  std::unordered_map<Formula, std::size_t, FormulaHash> index;
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (contains_implication(domain_[i])) {
      throw EvalError("probabilities are defined on conditional-free formulas only: " + render(domain_[i]));
    }
    index.emplace(domain_[i], i);
  }
  const auto names = atoms_of(domain_);
  if (names.size() <= kJointEnumerationAtoms) {
    // One pass over the joint assignments: entailment is inclusion of the
    // sets of designating assignments.
    const std::vector<std::string> atoms(names.begin(), names.end());
    std::vector<std::vector<bool>> designated(domain_.size());
    for_each_assignment(atoms, [&](const Assignment& a) {
      for (std::size_t i = 0; i < domain_.size(); ++i) designated[i].push_back(eval_formula(a, domain_[i]).t);
      return true;
    });
    for (std::size_t i = 0; i < domain_.size(); ++i)
      for (std::size_t j = 0; j < domain_.size(); ++j) {
        if (i == j) continue;
        bool included = true;
        for (std::size_t k = 0; included && k < designated[i].size(); ++k)
          included = !designated[i][k] || designated[j][k];
        if (included) entailments_.emplace_back(i, j);
      }
  } else {
    for (std::size_t i = 0; i < domain_.size(); ++i)
      for (std::size_t j = 0; j < domain_.size(); ++j) {
        if (i == j) continue;
        if (fde_entails(domain_[i], domain_[j])) entailments_.emplace_back(i, j);
      }
  }
  for (std::size_t i = 0; i < domain_.size(); ++i)
    for (std::size_t j = i; j < domain_.size(); ++j) {
      for (int order = 0; order < (i == j ? 1 : 2); ++order) {
        const Formula& a = order == 0 ? domain_[i] : domain_[j];
        const Formula& b = order == 0 ? domain_[j] : domain_[i];
        auto m = index.find(conj(a, b));
        auto k = index.find(disj(a, b));
        if (m != index.end() && k != index.end()) additivity_.push_back({i, j, m->second, k->second});
      }
    }
  for (const auto& c : options_.conditionals) {
    auto b = index.find(c.condition);
    auto m = index.find(conj(c.target, c.condition));
    if (b != index.end() && m != index.end()) conditionals_.push_back({b->second, m->second, c.value, c.target});
  }
}

std::vector<ProbabilityViolation> ProbabilityValidator::scan(const std::vector<Rational>& v, bool stop) const {
  if (v.size() != domain_.size()) throw PreconditionError("value vector does not match the validator domain");
  std::vector<ProbabilityViolation> out;
  auto report = [&](ProbabilityViolation violation) {
    out.push_back(std::move(violation));
    return stop;
  };
  for (std::size_t i = 0; i < v.size(); ++i) {
    if ((v[i] < 0 || v[i] > 1) && report({1, {domain_[i]}, "value " + to_string(v[i]) + " outside [0, 1]"}))
      return out;
  }
  for (const auto& [i, j] : entailments_) {
    if (v[i] > v[j] && report({2, {domain_[i], domain_[j]},
                               "entails but " + to_string(v[i]) + " > " + to_string(v[j])}))
      return out;
  }
  for (const auto& t : additivity_) {
    if (v[t.meet] + v[t.join] != v[t.a] + v[t.b] &&
        report({3, {domain_[t.a], domain_[t.b]},
                "p(meet) + p(join) = " + to_string(v[t.meet] + v[t.join]) + " but p(A) + p(B) = " +
                    to_string(v[t.a] + v[t.b])}))
      return out;
  }
  for (const auto& c : conditionals_) {
    if (v[c.condition] <= 0) continue;
    const Rational expected = v[c.meet] / v[c.condition];
    if (c.value != expected && report({4, {c.target, domain_[c.condition]},
                                       "conditional value " + to_string(c.value) + " but p(A & B)/p(B) = " +
                                           to_string(expected)}))
      return out;
  }
  if (options_.require_nontrivial && std::all_of(v.begin(), v.end(), [](const Rational& x) { return x <= 0; })) {
    report({0, {}, "every value is 0"});
  }
  return out;
}

std::vector<ProbabilityViolation> ProbabilityValidator::violations(const std::vector<Rational>& values) const {
  return scan(values, false);
}

bool ProbabilityValidator::coherent(const std::vector<Rational>& values) const { return scan(values, true).empty(); }

std::vector<ProbabilityViolation> validate_probability(const FormulaValues& values, const ValidateOptions& options) {
  std::vector<Formula> domain;
  std::vector<Rational> v;
  for (const auto& [f, x] : values) {
    domain.push_back(f);
    v.push_back(x);
  }
  return ProbabilityValidator(std::move(domain), options).violations(v);
}

std::vector<ProbabilityViolation> validate_probability(const ProbabilityAssignment& pa, const ValidateOptions& options) {
  return validate_probability(pa.values(), options);
}

std::string describe(const ProbabilityViolation& v) {
  std::ostringstream os;
  if (v.axiom == 0) {
    os << "non-triviality";
  } else {
    static const char* names[] = {"", "i", "ii", "iii", "iv"};
    os << "axiom " << names[v.axiom];
  }
  if (!v.witnesses.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) os << (i ? ", " : "") << render(v.witnesses[i]);
    os << ")";
  }
  os << ": " << v.detail;
  return os.str();
}

struct ProbabilityFunction::Impl {
  struct Measure {
    std::vector<std::string> atoms;
    std::vector<WeightedAssignment> masses;
  };
  std::variant<Measure, FormulaValues, std::function<Rational(const Formula&)>> data;
};

ProbabilityFunction::ProbabilityFunction(const StateDistribution& d)
    : impl_(std::make_shared<Impl>(Impl{Impl::Measure{d.atoms(), d.support()}})) {}

ProbabilityFunction::ProbabilityFunction(FormulaValues values)
    : impl_(std::make_shared<Impl>(Impl{std::move(values)})) {}

ProbabilityFunction ProbabilityFunction::measure(std::vector<std::string> atoms, std::vector<WeightedAssignment> masses) {
  atoms = checked_atoms(std::move(atoms));
  masses = normalize_entries(atoms, std::move(masses));
  return ProbabilityFunction(std::make_shared<Impl>(Impl{Impl::Measure{std::move(atoms), std::move(masses)}}));
}

ProbabilityFunction ProbabilityFunction::computed(std::function<Rational(const Formula&)> fn) {
  return ProbabilityFunction(std::make_shared<Impl>(Impl{std::move(fn)}));
}

Rational ProbabilityFunction::operator()(const Formula& f) const {
  if (const auto* m = std::get_if<Impl::Measure>(&impl_->data)) {
    if (contains_implication(f)) throw EvalError("probabilities are defined on conditional-free formulas only");
    const std::set<std::string> declared(m->atoms.begin(), m->atoms.end());
    for (const auto& a : atoms_of(f))
      if (!declared.count(a)) throw EvalError("unbound atom \"" + a + "\"");
    return measure_of(m->masses, f);
  }
  if (const auto* t = std::get_if<FormulaValues>(&impl_->data)) {
    auto it = t->find(f);
    if (it == t->end()) throw EvalError("no value for " + render(f));
    return it->second;
  }
  return std::get<2>(impl_->data)(f);
}

ProbabilityFunction::Kind ProbabilityFunction::kind() const noexcept {
  return static_cast<Kind>(impl_->data.index());
}

const std::vector<std::string>& ProbabilityFunction::atoms() const {
  const auto* m = std::get_if<Impl::Measure>(&impl_->data);
  if (!m) throw PreconditionError("not an assignment-level measure");
  return m->atoms;
}

const std::vector<WeightedAssignment>& ProbabilityFunction::masses() const {
  const auto* m = std::get_if<Impl::Measure>(&impl_->data);
  if (!m) throw PreconditionError("not an assignment-level measure");
  return m->masses;
}

const FormulaValues& ProbabilityFunction::table() const {
  const auto* t = std::get_if<FormulaValues>(&impl_->data);
  if (!t) throw PreconditionError("not a formula table");
  return *t;
}

std::optional<StateDistribution> ProbabilityFunction::as_distribution() const {
  const auto* m = std::get_if<Impl::Measure>(&impl_->data);
  if (!m) return std::nullopt;
  Rational total = 0;
  for (const auto& [a, w] : m->masses) total += w;
  if (total != 1) return std::nullopt;
  return StateDistribution(m->atoms, m->masses);
}

FormulaValues tabulate(const ProbabilityFunction& p, const std::vector<Formula>& domain) {
  FormulaValues out;
  for (const auto& f : domain) out.emplace(f, p(f));
  return out;
}

Rational conditional_probability(const ProbabilityFunction& p, const Formula& A, const Formula& B) {
  const Rational pb = p(B);
  if (pb <= 0) throw UndefinedConditional("p(" + render(A) + " | " + render(B) + ") is undefined: p(" + render(B) + ") = 0");
  return p(conj(A, B)) / pb;
}

bool behaves_as_partition(const ProbabilityFunction& p, const std::vector<Formula>& cells) {
  if (cells.empty()) return false;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j)
      if (p(conj(cells[i], cells[j])) != 0) return false;
  return p(disj_all(cells)) == 1;
}

std::pair<Rational, Rational> total_probability_check(const ProbabilityFunction& p, const Formula& A,
                                                      const std::vector<Formula>& cells) {
  if (!behaves_as_partition(p, cells)) throw PreconditionError("the cells do not behave as a partition");
  Rational rhs = 0;
  for (const auto& b : cells) {
    const Rational pb = p(b);
    if (pb > 0) rhs += conditional_probability(p, A, b) * pb;
  }
  return {p(A), rhs};
}

}  // namespace lablogic

// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero when
// any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "lablogic/betting.hpp"
#include "lablogic/errors.hpp"
#include "lablogic/generate.hpp"
#include "lablogic/io.hpp"
#include "lablogic/labsim.hpp"
#include "lablogic/model.hpp"
#include "lablogic/probability.hpp"
#include "lablogic/proof.hpp"
#include "lablogic/truth.hpp"
#include "lablogic/updating.hpp"
#include "oracle.hpp"

using namespace lablogic;
using testing_support::random_distribution;
using testing_support::random_rational;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) msgs_ << (failures_ > 1 ? "; " : "") << what;
  }
  std::size_t checks() const { return checks_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary + " (" + std::to_string(checks_) + " checks)"};
    return {false, std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed: " + msgs_.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream msgs_;
};

const std::vector<std::string> kAtoms{"p", "q", "r"};

std::vector<std::string> atoms_prefix(std::size_t n) { return {kAtoms.begin(), kAtoms.begin() + n}; }

// The fixed model corpus shared by criteria 2 and 3. Odd-numbered models
// come from frames with conditions vi..x.
struct CorpusModel {
  Model model;
  bool all_conditions;
};

const std::vector<CorpusModel>& corpus() {
  static const std::vector<CorpusModel> models = [] {
    std::vector<CorpusModel> out;
    Rng rng(20240601);
    for (int k = 0; k < 200; ++k) {
      const bool all = k % 2 == 1;
      const std::size_t states = 1 + static_cast<std::size_t>(k / 2) % 4;
      const std::size_t atoms = 1 + static_cast<std::size_t>(k / 8) % 3;
      out.push_back({random_model(rng, states, atoms_prefix(atoms), all ? ConditionSet::all_numbered() : ConditionSet{}),
                     all});
    }
    return out;
  }();
  return models;
}

bool valid_at_L(const Model& m, const Formula& f) {
  const Profile prof = eval_profile(m, f);
  for (StateId u = 0; u < m.size(); ++u)
    if (m.frame().in_L(u) && !prof[u].t) return false;
  return true;
}

Formula random_instance(Rng& rng, const AxiomSchema& s, const std::vector<std::string>& atoms) {
  Substitution sub;
  for (const char* mv : {"A", "B", "C"}) sub.insert_or_assign(mv, random_formula(rng, atoms, 2));
  return instantiate(s.pattern, sub);
}

// --- 1 ------------------------------------------------------------------

Outcome contraposition_countermodel() {
  Model m = parse_model(read_file(testing_support::data("contraposition.model.json")));
  auto violations = validate_frame(m.frame(), ConditionSet::all_numbered());
  const bool forward = eval_model(m, "u", parse("A -> ~B")).t;
  const bool backward = eval_model(m, "u", parse("B -> ~A")).t;
  std::ostringstream os;
  os << "T in v_u(A -> ~B): " << (forward ? "yes" : "no") << ", T in v_u(B -> ~A): " << (backward ? "yes" : "no")
     << ", frame violations:";
  if (violations.empty()) os << " none";
  for (const auto& v : violations) os << ' ' << describe(v, m.frame()) << ';';
  return {violations.empty() && forward && !backward, os.str()};
}

// --- 2 ------------------------------------------------------------------

Outcome soundness() {
  Tally t;
  Rng rng(2);
  const auto& schemas = axiom_schemas();
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const auto& [m, all] = corpus()[k];
    const auto& atoms = m.atoms();
    for (const auto& s : schemas) {
      if (s.number >= 12 && !all) continue;
      for (int i = 0; i < 6; ++i) {
        Formula f = random_instance(rng, s, atoms);
        t.expect(valid_at_L(m, f), s.id + " instance " + render(f) + " fails in model " + std::to_string(k));
      }
    }
    // Rules, with premises drawn from valid axiom instances and from random
    // formulas that happen to be valid in the model.
    auto valid_premise = [&](bool conditional) {
      for (int tries = 0; tries < 12; ++tries) {
        Formula f = tries % 2 ? random_formula(rng, atoms, 2)
                              : random_instance(rng, schemas[std::uniform_int_distribution<std::size_t>(0, 13)(rng)], atoms);
        if ((!conditional || f.is_implication()) && valid_at_L(m, f)) return std::optional<Formula>(f);
      }
      return std::optional<Formula>();
    };
    for (int i = 0; i < 4; ++i) {
      auto ab = valid_premise(true);
      auto other = valid_premise(false);
      if (!ab || !other) continue;
      const Formula A = ab->left(), B = ab->right(), C = random_formula(rng, atoms, 2);
      const std::string where = " in model " + std::to_string(k) + " from " + render(*ab);
      if (valid_at_L(m, A)) t.expect(valid_at_L(m, B), "R1" + where);
      t.expect(valid_at_L(m, conj(*ab, *other)), "R2" + where);
      t.expect(valid_at_L(m, imp(imp(C, A), imp(C, B))), "R3" + where);
      t.expect(valid_at_L(m, imp(imp(B, C), imp(A, C))), "R4" + where);
      t.expect(valid_at_L(m, imp(neg(imp(A, C)), neg(imp(B, C)))), "R5" + where);
      if (A.is_negation() && B.is_negation())
        t.expect(valid_at_L(m, imp(neg(imp(C, A.operand())), neg(imp(C, B.operand())))), "R6" + where);
    }
    // R6 from valid premises of its shape: A9 instances ~X -> ~~~X and
    // ~~~X -> ~X.
    const Formula X = random_formula(rng, atoms, 2), C = random_formula(rng, atoms, 2);
    const Formula nnX = neg(neg(X));
    t.expect(valid_at_L(m, imp(neg(imp(C, X)), neg(imp(C, nnX)))), "R6 (double negation) in model " + std::to_string(k));
    t.expect(valid_at_L(m, imp(neg(imp(C, nnX)), neg(imp(C, X)))), "R6 (double negation) in model " + std::to_string(k));
  }
  return t.outcome("200 models, A1-A11 everywhere, A12-A16 on frames with vi-x, R1-R6 preserve validity");
}

// --- 3 ------------------------------------------------------------------

Outcome persistence_and_deduction() {
  Tally t;
  Rng rng(3);
  for (std::size_t k = 0; k < corpus().size(); ++k) {
    const Model& m = corpus()[k].model;
    t.expect(check_persistence(m, 3).empty(), "persistence fails in model " + std::to_string(k));
    for (int i = 0; i < 100; ++i) {
      Formula a = random_formula(rng, m.atoms(), 2);
      Formula b = random_formula(rng, m.atoms(), 2);
      t.expect(consequence_in_model(m, {a}, b, false) == consequence_in_model(m, {}, imp(a, b), true),
               "deduction fails for " + render(a) + ", " + render(b) + " in model " + std::to_string(k));
    }
  }
  return t.outcome("persistence to depth 3 and 100 deduction pairs per model");
}

// --- 4 ------------------------------------------------------------------

Outcome fde_oracle() {
  Tally t;
  Rng rng(4);
  std::size_t entailed = 0;
  for (int i = 0; i < 1000; ++i) {
    Formula a = random_formula(rng, kAtoms, 3, false);
    Formula b = random_formula(rng, kAtoms, 3, false);
    if (i % 4 == 0) b = disj(b, a);  // keep a share of positive instances
    const bool expected = oracle::entails(a, b);
    entailed += expected;
    t.expect(fde_entails(a, b) == expected, render(a) + " |= " + render(b));
  }
  return t.outcome("1000 pairs, " + std::to_string(entailed) + " entailed");
}

// --- 5 ------------------------------------------------------------------

Outcome rfreq_coherence() {
  Tally t;
  Rng rng(5);
  std::size_t prefixes = 0;
  for (int k = 0; k < 100; ++k) {
    auto d = random_distribution(rng, {"p", "q"}, 1 + static_cast<std::size_t>(k) % 8);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 10000)(rng);
    TrialStream ts = sample_trials(d, n, static_cast<std::uint64_t>(k));

    std::vector<Formula> base;
    for (int i = 0; i < 3; ++i) base.push_back(random_formula(rng, {"p", "q"}, 2, false));
    std::vector<Formula> domain = base;
    struct Quad {
      std::size_t a, b, meet, join;
    };
    std::vector<Quad> quads;
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i + 1; j < base.size(); ++j) {
        domain.push_back(conj(base[i], base[j]));
        domain.push_back(disj(base[i], base[j]));
        quads.push_back({i, j, domain.size() - 2, domain.size() - 1});
      }
    ProbabilityValidator validator(domain);
    FrequencyCounter counter(domain);
    bool coherent = true;
    bool counts = true;
    for (const auto& trial : ts.trials) {
      counter.add(trial);
      ++prefixes;
      coherent = coherent && validator.coherent(counter.rfreq());
      for (const auto& q : quads)
        counts = counts && counter.freq(q.join) + counter.freq(q.meet) == counter.freq(q.a) + counter.freq(q.b);
    }
    t.expect(coherent, "incoherent prefix in stream " + std::to_string(k));
    t.expect(counts, "count identity fails in stream " + std::to_string(k));
  }
  return t.outcome("100 streams, " + std::to_string(prefixes) + " prefixes");
}

// --- 6 ------------------------------------------------------------------

Rational payoff(const Bet& b, const oracle::Assignment& a) {
  if (b.condition && !oracle::has_t(oracle::eval(a, *b.condition))) return 0;
  const bool hit = oracle::has_t(oracle::eval(a, b.target));
  const bool reversed = b.kind == BetKind::Reversed || b.kind == BetKind::ReversedConditional;
  return hit != reversed ? Rational((1 - b.quotient) * b.stake) : Rational(-b.quotient * b.stake);
}

// Checks every outcome's gain against `closed_form(outcome)`.
void check_gains(Tally& t, const std::vector<Bet>& bets, const std::function<Rational(const oracle::Assignment&)>& closed_form,
                 const std::string& what) {
  std::vector<Formula> fs;
  for (const auto& b : bets) {
    fs.push_back(b.target);
    if (b.condition) fs.push_back(*b.condition);
  }
  bool all = true;
  for (const auto& a : oracle::all_assignments(oracle::atoms_in(fs))) {
    Rational g = 0;
    for (const auto& b : bets) g += payoff(b, a);
    all = all && g == closed_form(a) && g < 0;
  }
  t.expect(all, what + ": gain differs from closed form");
  t.expect(is_dutch_book(bets).dutch_book, what + ": not a Dutch book");
}

Rational quotient(Rng& rng) { return random_rational(rng, 0, 12, 12); }

Outcome dutch_book_recipes() {
  Tally t;
  Rng rng(6);
  const std::vector<std::string> atoms{"a", "b", "c"};
  for (int i = 0; i < 60; ++i) {
    const Formula A = random_formula(rng, atoms, 2, false);
    const Formula B = random_formula(rng, atoms, 2, false);
    const Rational scale = random_rational(rng, 1, 5, 2);

    {  // axiom i, out of range
      const Rational p = i % 2 ? Rational(random_rational(rng, 1, 6, 4) + 1) : Rational(-random_rational(rng, 1, 6, 4));
      auto bets = construct_violation_stakes(violation::Range{A, p}, scale);
      const Rational S = bets.at(0).stake;
      t.expect(bets.size() == 1 && (p < 0 ? S < 0 : S > 0), "range stake sign");
      check_gains(
          t, bets,
          [&](const oracle::Assignment& a) {
            return oracle::has_t(oracle::eval(a, A)) ? Rational((1 - p) * S) : Rational(-p * S);
          },
          "range");
    }
    {  // axiom i, two quotients
      Rational p = quotient(rng), q = quotient(rng);
      if (p == q) q = p == 1 ? Rational(0) : Rational(1);
      auto bets = construct_violation_stakes(violation::TwoQuotient{A, p, q}, scale);
      const Rational S = bets.at(0).stake;
      t.expect(bets.at(1).stake == -S, "two-quotient stakes");
      check_gains(t, bets, [&](const oracle::Assignment&) { return Rational((q - p) * S); }, "two-quotient");
    }
    {  // axiom ii: A |= A | B
      const Formula weaker = disj(A, B);
      Rational p = quotient(rng), q = quotient(rng);
      if (p <= q) std::swap(p, q);
      if (p == q) p = 1, q = 0;
      auto bets = construct_violation_stakes(violation::Monotonicity{A, weaker, p, q}, scale);
      const Rational S = bets.at(0).stake;
      t.expect(S > 0 && bets.at(1).stake == -S, "monotonicity stakes");
      check_gains(
          t, bets,
          [&](const oracle::Assignment& a) {
            const bool ha = oracle::has_t(oracle::eval(a, A));
            const bool hb = oracle::has_t(oracle::eval(a, weaker));
            if (!ha && hb) return Rational(-p * S - (1 - q) * S);
            return Rational((q - p) * S);
          },
          "monotonicity");
    }
    {  // axiom iii
      Rational p = quotient(rng), q = quotient(rng), r = quotient(rng), s = quotient(rng);
      if (p + q == r + s) s = s == 1 ? Rational(0) : Rational(1);
      if (p + q == r + s) r = r == 1 ? Rational(0) : Rational(1);
      auto bets = construct_violation_stakes(violation::Additivity{A, B, p, q, r, s}, scale);
      const Rational S = bets.at(0).stake;
      check_gains(t, bets, [&](const oracle::Assignment&) { return Rational(-((p + q) - (r + s)) * S); }, "additivity");
    }
    {  // axiom iv and the diachronic case
      Rational p = random_rational(rng, 1, 12, 12), q = quotient(rng), r = quotient(rng);
      if (q >= p) q = p / 2;
      if (p * r == q) r = r == 1 ? Rational(0) : Rational(1);
      auto bets = construct_violation_stakes(violation::Conditional{A, B, p, q, r}, scale);
      const Rational S = bets.at(2).stake;
      t.expect(bets.at(0).stake == r * S && bets.at(1).stake == -S, "conditional stakes");
      check_gains(t, bets, [&](const oracle::Assignment&) { return Rational(-(p * r - q) * S); }, "conditional");

      if (q == 0) q = p / 3;
      if (r * p == q) r = r == 1 ? Rational(0) : Rational(1);
      auto dia = construct_violation_stakes(violation::Diachronic{A, B, p, q, r}, scale);
      const Rational Sd = dia.at(2).stake;
      t.expect(dia.at(2).is_conditional(), "diachronic third bet is conditional");
      check_gains(t, dia, [&](const oracle::Assignment&) { return Rational(-(p * r - q) * Sd); }, "diachronic");
    }
  }
  return t.outcome("60 instances of each family, closed forms exact");
}

// --- 7 ------------------------------------------------------------------

Outcome converse_coherence() {
  Tally t;
  Rng rng(7);
  const std::vector<std::string> atoms{"p", "q", "r"};
  std::size_t conditional = 0, reversed = 0;
  for (int k = 0; k < 100; ++k) {
    auto d = random_distribution(rng, atoms, 2 + static_cast<std::size_t>(k) % 12);
    for (int f = 0; f < 100; ++f) {
      std::vector<Bet> bets;
      const int count = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int i = 0; i < count; ++i) {
        const Formula A = random_formula(rng, atoms, 2, false);
        const Formula B = random_formula(rng, atoms, 2, false);
        const Rational stake = random_rational(rng, -6, 6, 2);
        const Rational pa = induced_probability(d, A);
        const Rational pb = induced_probability(d, B);
        const int kind = std::uniform_int_distribution<int>(0, 3)(rng);
        if (kind >= 2 && pb > 0) {
          const Rational cond = induced_probability(d, conj(A, B)) / pb;
          bets.push_back(kind == 2 ? Bet::conditional(A, B, cond, stake)
                                   : Bet::reversed_conditional(A, B, 1 - cond, stake));
          ++conditional;
          reversed += kind == 3;
        } else if (kind == 1) {
          bets.push_back(Bet::reversed(A, 1 - pa, stake));
          ++reversed;
        } else {
          bets.push_back(Bet::plain(A, pa, stake));
        }
      }
      t.expect(expected_net_gain(d, bets) == 0, "non-zero expectation");
      t.expect(!is_dutch_book(bets).dutch_book, "Dutch book against induced quotients");
    }
  }
  return t.outcome("10000 families, " + std::to_string(conditional) + " conditional and " + std::to_string(reversed) +
                   " reversed bets");
}

// --- 8 ------------------------------------------------------------------

Outcome total_probability() {
  Tally t;
  Rng rng(8);
  const std::vector<std::string> atoms{"a", "b", "c"};
  std::size_t observation = 0;
  for (int k = 0; k < 100; ++k) {
    auto d = random_distribution(rng, atoms, 3 + static_cast<std::size_t>(k) % 10, {"a", "b"});
    ProbabilityFunction p = d;
    std::vector<Formula> cells;
    switch (k % 3) {
      case 0:
        cells = {atom("a"), neg(atom("a"))};
        break;
      case 1:
        cells = {parse("a & b"), parse("a & ~b"), parse("~a")};
        break;
      default:
        cells = {parse("a | b"), parse("~a & ~b")};
        break;
    }
    t.expect(behaves_as_partition(p, cells), "family is not a partition in instance " + std::to_string(k));
    for (int i = 0; i < 5; ++i) {
      Formula A = random_formula(rng, atoms, 3, false);
      auto [lhs, rhs] = total_probability_check(p, A, cells);
      t.expect(lhs == rhs, "total probability fails for " + render(A));
      t.expect(lhs == oracle::probability(d.atoms(), d.support(), A), "p(A) differs from oracle");
      Formula C = random_formula(rng, atoms, 2, false);
      if (p(C) > 0) {
        std::vector<Formula> restricted;
        for (const auto& b : cells) restricted.push_back(conj(b, C));
        t.expect(behaves_as_partition(bayes_update(p, C), restricted),
                 "conditional partition fails for C = " + render(C));
        ++observation;
      }
    }
  }
  return t.outcome("100 distributions; conditional partitions checked " + std::to_string(observation) + " times");
}

// --- 9 ------------------------------------------------------------------

struct Instance {
  UpdateSpec spec;
  std::vector<Formula> base;
  std::vector<std::string> atoms;
};

std::vector<Rational> values_on(const ProbabilityFunction& p, const std::vector<Formula>& fs) {
  std::vector<Rational> out;
  for (const auto& f : fs) out.push_back(p(f));
  return out;
}

// A measure near `out`: some mass moved between two assignments.
std::optional<ProbabilityFunction> perturb_measure(Rng& rng, const ProbabilityFunction& out,
                                                   const std::vector<std::string>& atoms) {
  auto masses = out.masses();
  if (masses.empty()) return std::nullopt;
  auto from = std::uniform_int_distribution<std::size_t>(0, masses.size() - 1)(rng);
  if (masses[from].second == 0) return std::nullopt;
  Assignment target;
  for (const auto& a : atoms) target[a] = TruthValue::from_code(std::uniform_int_distribution<unsigned>(0, 3)(rng));
  const Rational moved = masses[from].second * random_rational(rng, 1, 4, 4);
  masses[from].second -= moved;
  bool merged = false;
  for (auto& [a, w] : masses)
    if (a == target) {
      w += moved;
      merged = true;
    }
  if (!merged) masses.emplace_back(target, moved);
  return ProbabilityFunction::measure(atoms, masses);
}

std::optional<Instance> make_instance(Rng& rng, int rule) {
  const std::vector<std::string> atoms{"a", "b", "c"};
  std::vector<Formula> base;
  for (int i = 0; i < 3; ++i) base.push_back(random_formula(rng, atoms, 2, false));
  auto dist = [&](std::set<std::string> classical = {}) {
    return ProbabilityFunction(random_distribution(rng, atoms, 4 + std::uniform_int_distribution<std::size_t>(0, 10)(rng),
                                                   classical));
  };
  auto cells_of_kind = [&](int kind) -> std::vector<Formula> {
    switch (kind % 3) {
      case 0:
        return {atom("a"), neg(atom("a"))};
      case 1:
        return {parse("a & b"), parse("a & ~b"), parse("~a")};
      default:
        return {parse("a | b"), parse("~a & ~b")};
    }
  };
  auto all_positive = [](const ProbabilityFunction& p, const std::vector<Formula>& fs) {
    for (const auto& f : fs)
      if (p(f) <= 0) return false;
    return true;
  };
  switch (rule) {
    case 0: {
      auto p = dist();
      Formula B = random_formula(rng, atoms, 2, false);
      if (p(B) == 0) return std::nullopt;
      return Instance{BayesSpec{p, B}, base, atoms};
    }
    case 1: {
      auto p = dist({"a", "b"});
      auto cells = cells_of_kind(std::uniform_int_distribution<int>(0, 2)(rng));
      if (!all_positive(p, cells)) return std::nullopt;
      std::vector<Rational> w;
      Rational total = 0;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        w.push_back(std::uniform_int_distribution<int>(1, 9)(rng));
        total += w.back();
      }
      std::vector<std::pair<Formula, Rational>> weighted;
      for (std::size_t i = 0; i < cells.size(); ++i) weighted.emplace_back(cells[i], w[i] / total);
      return Instance{JeffreySpec{p, weighted}, base, atoms};
    }
    case 2: {
      auto px = dist(), py = dist(), pz = dist();
      Formula B = random_formula(rng, atoms, 1, false);
      if (px(B) == 0 || py(B) == 0 || pz(B) == 0) return std::nullopt;
      return Instance{CoordSpec{px, py, pz, B}, base, atoms};
    }
    case 3: {
      auto py = dist({"a", "b"}), pz = dist({"a", "b"});
      auto cells = cells_of_kind(std::uniform_int_distribution<int>(0, 1)(rng) * 2);
      if (py(cells[0]) == 0 || !behaves_as_partition(pz, cells)) return std::nullopt;
      return Instance{CoordBayesSpec{py, pz, cells[0], cells[1]}, base, atoms};
    }
    case 4: {
      auto py = dist({"a", "b"}), pz = dist({"a", "b"});
      auto cells = cells_of_kind(std::uniform_int_distribution<int>(0, 2)(rng));
      if (!all_positive(py, cells) || !behaves_as_partition(pz, cells)) return std::nullopt;
      return Instance{CoordJeffreySpec{py, pz, cells}, base, atoms};
    }
    default: {
      auto p = dist({"a", "b"});
      const Formula A1 = atom("a"), A2 = neg(atom("a")), B1 = atom("b"), B2 = neg(atom("b"));
      if (p(A1) == 0) return std::nullopt;
      const Rational y1 = conditional_probability(p, B1, A1);
      if (y1 == 0 || y1 == 1) return std::nullopt;
      const Rational nb1 = random_rational(rng, 0, 10, 10);
      return Instance{AdamsSpec{p, p, A1, A2, B1, B2, nb1, 1 - nb1}, base, atoms};
    }
  }
}

Outcome update_characterizations() {
  Tally t;
  Rng rng(9);
  const char* names[] = {"bayes", "jeffrey", "coord", "coord-bayes", "coord-jeffrey", "adams"};
  std::ostringstream summary;
  for (int rule = 0; rule < 6; ++rule) {
    int instances = 0, perturbed = 0;
    for (int attempt = 0; instances < 100 && attempt < 5000; ++attempt) {
      auto inst = make_instance(rng, rule);
      if (!inst) continue;
      ++instances;
      const ProbabilityFunction out = apply_update(inst->spec);
      const auto range = characterization_range(inst->spec, inst->base);
      const auto expected = values_on(out, range);
      auto report = check_characterization(inst->spec, out, inst->base);
      std::string failed;
      for (const auto& name : report.failed) failed += " [" + name + "]";
      t.expect(report.holds, std::string(names[rule]) + ": output fails characterization" + failed);

      // Converse direction: candidates that differ from the output on the
      // range must fail; candidates that pass must agree with it.
      for (int k = 0; k < 3; ++k) {
        std::optional<ProbabilityFunction> cand;
        if (out.kind() == ProbabilityFunction::Kind::Measure && k < 2) {
          cand = perturb_measure(rng, out, inst->atoms);
        } else if (k == 0) {
          // Computed output: alter one value.
          const Formula victim = range[std::uniform_int_distribution<std::size_t>(0, range.size() - 1)(rng)];
          const Rational bump = out(victim) == 0 ? Rational(1, 2) : Rational(out(victim) * 2);
          cand = ProbabilityFunction::computed([out, victim, bump](const Formula& f) { return f == victim ? bump : out(f); });
        } else {
          cand = ProbabilityFunction(random_distribution(rng, inst->atoms, 6));
        }
        if (!cand) continue;
        const bool same = values_on(*cand, range) == expected;
        const bool holds = check_characterization(inst->spec, *cand, inst->base).holds;
        if (!same) {
          ++perturbed;
          t.expect(!holds, std::string(names[rule]) + ": perturbed candidate passes");
        } else {
          t.expect(holds, std::string(names[rule]) + ": candidate equal on the range fails");
        }
      }
    }
    t.expect(instances == 100, std::string(names[rule]) + ": could not generate 100 instances");
    summary << (rule ? ", " : "") << names[rule] << " " << instances << "/" << perturbed;
  }
  return t.outcome("instances/perturbed candidates: " + summary.str());
}

// --- 10 -----------------------------------------------------------------

Outcome proof_corpus() {
  Tally t;
  std::vector<Proof> proofs;
  for (const char* name : {"idempotence_intro.proof", "idempotence_elim.proof", "conj_commute.proof"}) {
    proofs.push_back(parse_proof(read_file(testing_support::data(name))));
    auto r = check_proof(proofs.back());
    t.expect(r.accepted, std::string(name) + " rejected at line " + std::to_string(r.line) + ": " + r.reason);
  }
  Rng rng(10);
  int mutated = 0;
  while (mutated < 50) {
    Proof p = proofs[std::uniform_int_distribution<std::size_t>(0, proofs.size() - 1)(rng)];
    const std::size_t line = std::uniform_int_distribution<std::size_t>(1, p.size())(rng);
    auto& [formula, just] = p[line - 1];
    const int kind = std::uniform_int_distribution<int>(0, 2)(rng);
    if (kind == 0) {
      // Every schema and every rule conclusion has a fixed main connective
      // other than a leading negation of the whole line.
      formula = neg(formula);
    } else if (just.kind == Justification::Kind::Axiom) {
      // Cite a schema the formula does not instantiate.
      std::vector<std::string> wrong;
      for (const auto& s : axiom_schemas()) {
        if (s.number > 11) continue;
        bool any = false;
        for (const auto& other : axiom_schemas())
          if (other.id == s.id && match_pattern(other.pattern, formula)) any = true;
        if (!any && std::find(wrong.begin(), wrong.end(), s.id) == wrong.end()) wrong.push_back(s.id);
      }
      just.id = wrong[std::uniform_int_distribution<std::size_t>(0, wrong.size() - 1)(rng)];
    } else if (kind == 1) {
      just.premises[0] = line;  // not an earlier line
    } else {
      just.id = just.id == "R1" ? "R2" : "R1";
    }
    auto r = check_proof(p);
    t.expect(!r.accepted && r.line == line,
             "mutation at line " + std::to_string(line) + " reported as " +
                 (r.accepted ? std::string("accepted") : "line " + std::to_string(r.line)));
    ++mutated;
  }
  return t.outcome("3 derivations accepted, 50 single-line mutations rejected at the corrupted line");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::function<Outcome()> run;
    double budget_seconds;  // 0: no time requirement
  };
  const std::vector<Criterion> criteria = {
      {1, contraposition_countermodel, 1},  {2, soundness, 60},
      {3, persistence_and_deduction, 0},    {4, fde_oracle, 0},
      {5, rfreq_coherence, 0},              {6, dutch_book_recipes, 0},
      {7, converse_coherence, 0},           {8, total_probability, 0},
      {9, update_characterizations, 0},     {10, proof_corpus, 0},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs >= c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    all = all && o.pass;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << "criterion " << c.number << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << " ["
              << time.str() << " s]" << std::endl;
  }
  return all ? 0 : 1;
}

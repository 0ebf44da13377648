#include "lablogic/updating.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "lablogic/errors.hpp"

namespace lablogic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using Weight = std::function<Rational(const Assignment&)>;

bool designates(const Assignment& a, const Formula& f) { return eval_formula(a, f).designated(); }

// Multiplies a measure's masses pointwise; anything else falls back to the
// formula-level definition.
ProbabilityFunction reweight_or(const ProbabilityFunction& p, const Weight& w,
                                std::function<Rational(const Formula&)> fallback) {
  if (p.kind() != ProbabilityFunction::Kind::Measure) return ProbabilityFunction::computed(std::move(fallback));
  std::vector<WeightedAssignment> masses;
  for (const auto& [a, m] : p.masses()) {
    Rational scaled = m * w(a);
    if (scaled != 0) masses.emplace_back(a, scaled);
  }
  return ProbabilityFunction::measure(p.atoms(), std::move(masses));
}

[[noreturn]] void fail(const std::string& rule, const std::string& what) {
  throw PreconditionError(rule + ": " + what);
}

Rational positive(const ProbabilityFunction& p, const Formula& f, const std::string& rule, const std::string& who) {
  Rational v = p(f);
  if (v <= 0) throw UndefinedConditional(rule + ": " + who + "(" + render(f) + ") = 0");
  return v;
}

void require_partition(const ProbabilityFunction& p, const std::vector<Formula>& cells, const std::string& rule,
                       const std::string& who) {
  if (!behaves_as_partition(p, cells)) {
    std::string names;
    for (const auto& c : cells) names += (names.empty() ? "" : ", ") + render(c);
    fail(rule, "{" + names + "} does not behave as a partition under " + who);
  }
}

std::vector<Formula> cells_of(const std::vector<std::pair<Formula, Rational>>& cells) {
  std::vector<Formula> out;
  for (const auto& [f, w] : cells) out.push_back(f);
  return out;
}

void check_weights(const std::vector<std::pair<Formula, Rational>>& cells, const std::string& rule) {
  if (cells.empty()) fail(rule, "no cells");
  Rational total = 0;
  for (const auto& [f, w] : cells) {
    if (w < 0) fail(rule, "negative weight for " + render(f));
    total += w;
  }
  if (total != 1) fail(rule, "weights sum to " + to_string(total) + ", not 1");
}

// p(target | condition) with p(condition) > 0 checked by the caller.
Rational cond(const ProbabilityFunction& p, const Formula& target, const Formula& condition) {
  return p(conj(target, condition)) / p(condition);
}

void add_unique(std::vector<Formula>& out, std::set<Formula>& seen, const Formula& f) {
  if (seen.insert(f).second) out.push_back(f);
}

std::vector<Formula> rule_cells(const UpdateSpec& spec) {
  return std::visit(overloaded{
                        [](const BayesSpec& s) { return std::vector<Formula>{s.B}; },
                        [](const JeffreySpec& s) { return cells_of(s.cells); },
                        [](const CoordSpec& s) { return std::vector<Formula>{s.B}; },
                        [](const CoordBayesSpec& s) { return std::vector<Formula>{s.B1, s.B2}; },
                        [](const CoordJeffreySpec& s) { return s.cells; },
                        [](const AdamsSpec& s) { return std::vector<Formula>{s.A1, s.A2, s.B1, s.B2}; },
                    },
                    spec);
}

std::vector<Formula> pairwise_meets(const std::vector<Formula>& cells) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = i + 1; j < cells.size(); ++j) out.push_back(conj(cells[i], cells[j]));
  return out;
}

// Condition bookkeeping for check_characterization.
class Report {
 public:
  void check(const std::string& name, bool ok) {
    if (!ok && std::find(out_.failed.begin(), out_.failed.end(), name) == out_.failed.end()) {
      out_.holds = false;
      out_.failed.push_back(name);
    }
  }
  CharacterizationReport done() { return std::move(out_); }

 private:
  CharacterizationReport out_;
};

bool partition_under(const ProbabilityFunction& c, const std::vector<Formula>& cells) {
  return behaves_as_partition(c, cells);
}

// c(target | condition) == expected, where either side may be undefined;
// two undefined sides agree.
bool conditional_agrees(const ProbabilityFunction& c, const Formula& target, const Formula& condition,
                        const std::optional<Rational>& expected) {
  const Rational pc = c(condition);
  if (pc == 0) return !expected.has_value();
  return expected.has_value() && c(conj(target, condition)) / pc == *expected;
}

std::optional<Rational> maybe_cond(const ProbabilityFunction& p, const Formula& target, const Formula& condition) {
  const Rational pc = p(condition);
  if (pc == 0) return std::nullopt;
  return p(conj(target, condition)) / pc;
}

}  // namespace

std::string rule_name(const UpdateSpec& spec) {
  return std::visit(overloaded{
                        [](const BayesSpec&) { return std::string("bayes"); },
                        [](const JeffreySpec&) { return std::string("jeffrey"); },
                        [](const CoordSpec&) { return std::string("coord"); },
                        [](const CoordBayesSpec&) { return std::string("coord-bayes"); },
                        [](const CoordJeffreySpec&) { return std::string("coord-jeffrey"); },
                        [](const AdamsSpec&) { return std::string("adams"); },
                    },
                    spec);
}

ProbabilityFunction bayes_update(const ProbabilityFunction& p, const Formula& B) {
  const Rational pb = positive(p, B, "bayes", "p");
  return reweight_or(
      p, [B, pb](const Assignment& a) { return designates(a, B) ? Rational(1 / pb) : Rational(0); },
      [p, B, pb](const Formula& A) { return Rational(p(conj(A, B)) / pb); });
}

ProbabilityFunction jeffrey_update(const ProbabilityFunction& p, const std::vector<std::pair<Formula, Rational>>& cells) {
  check_weights(cells, "jeffrey");
  std::vector<Rational> denom;
  for (const auto& [b, w] : cells) denom.push_back(positive(p, b, "jeffrey", "p"));
  auto out = reweight_or(
      p,
      [cells, denom](const Assignment& a) {
        Rational total = 0;
        for (std::size_t i = 0; i < cells.size(); ++i)
          if (designates(a, cells[i].first)) total += cells[i].second / denom[i];
        return total;
      },
      [p, cells, denom](const Formula& A) {
        Rational total = 0;
        for (std::size_t i = 0; i < cells.size(); ++i) total += p(conj(A, cells[i].first)) / denom[i] * cells[i].second;
        return total;
      });
  for (const auto& meet : pairwise_meets(cells_of(cells)))
    if (out(meet) != 0) fail("jeffrey", "p*(" + render(meet) + ") = " + to_string(out(meet)) + ", not 0");
  return out;
}

ProbabilityFunction coord_conditionalize(const ProbabilityFunction& px, const ProbabilityFunction& py,
                                         const ProbabilityFunction& pz, const Formula& B) {
  const Rational pzb = positive(pz, B, "coord", "p_z");
  return ProbabilityFunction::computed([px, py, B, pzb](const Formula& A) {
    const Rational xa = px(A);
    const Rational ya = py(A);
    if (xa == 0 || ya == 0) return Rational(0);
    return Rational(py(conj(B, A)) / ya * xa / pzb);
  });
}

ProbabilityFunction coord_bayes_update(const ProbabilityFunction& py, const ProbabilityFunction& pz, const Formula& B1,
                                       const Formula& B2) {
  require_partition(pz, {B1, B2}, "coord-bayes", "p_z");
  const Rational yb1 = positive(py, B1, "coord-bayes", "p_y");
  if (py(conj(B1, B2)) != pz(conj(B1, B2))) fail("coord-bayes", "p_y(B1 & B2) differs from p_z(B1 & B2)");
  return reweight_or(
      py, [B1, yb1](const Assignment& a) { return designates(a, B1) ? Rational(1 / yb1) : Rational(0); },
      [py, B1, yb1](const Formula& A) { return Rational(py(conj(A, B1)) / yb1); });
}

ProbabilityFunction coord_jeffrey_update(const ProbabilityFunction& py, const ProbabilityFunction& pz_star,
                                         const std::vector<Formula>& cells) {
  require_partition(pz_star, cells, "coord-jeffrey", "p_z*");
  std::vector<Rational> denom;
  std::vector<Rational> weight;
  for (const auto& b : cells) {
    denom.push_back(positive(py, b, "coord-jeffrey", "p_y"));
    weight.push_back(pz_star(b));
  }
  for (const auto& meet : pairwise_meets(cells))
    if (py(meet) != pz_star(meet)) fail("coord-jeffrey", "p_y(" + render(meet) + ") differs from p_z*");
  return reweight_or(
      py,
      [cells, denom, weight](const Assignment& a) {
        Rational total = 0;
        for (std::size_t i = 0; i < cells.size(); ++i)
          if (designates(a, cells[i])) total += weight[i] / denom[i];
        return total;
      },
      [py, cells, denom, weight](const Formula& A) {
        Rational total = 0;
        for (std::size_t i = 0; i < cells.size(); ++i) total += py(conj(A, cells[i])) / denom[i] * weight[i];
        return total;
      });
}

ProbabilityFunction adams_update(const ProbabilityFunction& py, const Rational& new_b1, const Rational& new_b2,
                                 const ProbabilityFunction& pz, const Formula& A1, const Formula& A2,
                                 const Formula& B1, const Formula& B2) {
  require_partition(pz, {A1, A2}, "adams", "p_z");
  require_partition(pz, {B1, B2}, "adams", "p_z");
  positive(py, A1, "adams", "p_y");
  const Rational y1 = cond(py, B1, A1);
  const Rational y2 = cond(py, B2, A1);
  if (!(y1 > 0 && y1 < 1)) fail("adams", "p_y(B1 | A1) = " + to_string(y1) + " is not strictly between 0 and 1");
  if (y2 <= 0) throw UndefinedConditional("adams: p_y(B2 | A1) = 0");
  if (new_b1 < 0 || new_b2 < 0) fail("adams", "negative new conditional probability");
  if (new_b1 + new_b2 != 1) fail("adams", "new conditional probabilities sum to " + to_string(new_b1 + new_b2));
  const Rational k1 = new_b1 / y1;
  const Rational k2 = new_b2 / y2;
  const Formula c1 = conj(A1, B1);
  const Formula c2 = conj(A1, B2);
  return reweight_or(
      pz,
      [=](const Assignment& a) {
        Rational w = 0;
        if (designates(a, c1)) w += k1;
        if (designates(a, c2)) w += k2;
        if (designates(a, A2)) w += 1;
        return w;
      },
      [=](const Formula& C) { return Rational(k1 * pz(conj(c1, C)) + k2 * pz(conj(c2, C)) + pz(conj(A2, C))); });
}

ProbabilityFunction apply_update(const UpdateSpec& spec) {
  return std::visit(
      overloaded{
          [](const BayesSpec& s) { return bayes_update(s.p, s.B); },
          [](const JeffreySpec& s) { return jeffrey_update(s.p, s.cells); },
          [](const CoordSpec& s) { return coord_conditionalize(s.px, s.py, s.pz, s.B); },
          [](const CoordBayesSpec& s) { return coord_bayes_update(s.py, s.pz, s.B1, s.B2); },
          [](const CoordJeffreySpec& s) { return coord_jeffrey_update(s.py, s.pz_star, s.cells); },
          [](const AdamsSpec& s) { return adams_update(s.py, s.new_b1, s.new_b2, s.pz, s.A1, s.A2, s.B1, s.B2); },
      },
      spec);
}

std::vector<Formula> characterization_range(const UpdateSpec& spec, const std::vector<Formula>& base) {
  std::vector<Formula> out;
  std::set<Formula> seen;
  const auto cells = rule_cells(spec);
  for (const auto& f : base) add_unique(out, seen, f);
  for (const auto& c : cells) add_unique(out, seen, c);
  for (const auto& f : base)
    for (const auto& c : cells) {
      add_unique(out, seen, conj(f, c));
      add_unique(out, seen, disj(f, c));
    }
  return out;
}

std::vector<Formula> characterization_domain(const UpdateSpec& spec, const std::vector<Formula>& base) {
  const auto range = characterization_range(spec, base);
  std::vector<Formula> out;
  std::set<Formula> seen;
  for (const auto& f : range) add_unique(out, seen, f);
  auto meets_with = [&](const Formula& condition) {
    for (const auto& f : range) add_unique(out, seen, conj(f, condition));
  };
  auto partition_formulas = [&](const std::vector<Formula>& cells) {
    for (const auto& c : cells) add_unique(out, seen, c);
    for (const auto& m : pairwise_meets(cells)) add_unique(out, seen, m);
    add_unique(out, seen, disj_all(cells));
  };
  std::visit(overloaded{
                 [&](const BayesSpec&) {},
                 [&](const JeffreySpec& s) { partition_formulas(cells_of(s.cells)); },
                 [&](const CoordSpec&) {},
                 [&](const CoordBayesSpec& s) {
                   meets_with(s.B1);
                   partition_formulas({s.B1, s.B2});
                 },
                 [&](const CoordJeffreySpec& s) {
                   for (const auto& b : s.cells) meets_with(b);
                   partition_formulas(s.cells);
                 },
                 [&](const AdamsSpec& s) {
                   add_unique(out, seen, conj(s.B1, s.A1));
                   add_unique(out, seen, conj(s.B2, s.A1));
                   meets_with(conj(s.A1, s.B1));
                   meets_with(conj(s.A1, s.B2));
                   meets_with(s.A2);
                   partition_formulas({conj(s.A1, s.B1), conj(s.A1, s.B2), s.A2});
                 },
             },
             spec);
  return out;
}

CharacterizationReport check_characterization(const UpdateSpec& spec, const ProbabilityFunction& c,
                                              const std::vector<Formula>& base) {
  const auto range = characterization_range(spec, base);
  Report r;
  std::visit(
      overloaded{
          [&](const BayesSpec& s) {
            const Rational pb = positive(s.p, s.B, "bayes", "p");
            bool ok = true;
            for (const auto& A : range) ok = ok && c(A) == s.p(conj(A, s.B)) / pb;
            r.check("definition", ok);
          },
          [&](const JeffreySpec& s) {
            check_weights(s.cells, "jeffrey");
            std::vector<Rational> denom;
            for (const auto& [b, w] : s.cells) denom.push_back(positive(s.p, b, "jeffrey", "p"));
            bool ok = true;
            for (const auto& A : range) {
              Rational expected = 0;
              for (std::size_t i = 0; i < s.cells.size(); ++i)
                expected += s.p(conj(A, s.cells[i].first)) / denom[i] * s.cells[i].second;
              ok = ok && c(A) == expected;
            }
            r.check("definition", ok);
            bool weights = true;
            for (const auto& [b, w] : s.cells) weights = weights && c(b) == w;
            r.check("cell weights", weights);
            bool meets = true;
            for (const auto& m : pairwise_meets(cells_of(s.cells))) meets = meets && c(m) == 0;
            r.check("disjoint cells", meets);
          },
          [&](const CoordSpec& s) {
            const Rational xb = s.px(s.B);
            const Rational yb = s.py(s.B);
            const Rational zb = s.pz(s.B);
            if (xb * yb * zb <= 0) fail("coord", "p_x(B) p_y(B) p_z(B) = 0");
            r.check("i", c(s.B) == xb / zb);
            // p_y(B | A), read as 0 when p_y(A) = 0.
            auto likelihood = [&](const Formula& A) {
              const Rational ya = s.py(A);
              return ya == 0 ? Rational(0) : Rational(s.py(conj(s.B, A)) / ya);
            };
            bool zeros = true;
            std::optional<Rational> ratio;
            bool constant = true;
            for (const auto& A : range) {
              const Rational ca = c(A);
              const Rational xa = s.px(A);
              const Rational la = likelihood(A);
              zeros = zeros && ((ca == 0) == (xa == 0 || la == 0));
              if (ca != 0) {
                Rational v = xa / ca * la;
                if (!ratio) ratio = v;
                constant = constant && *ratio == v;
              }
            }
            r.check("ii", zeros);
            r.check("iii", constant);
          },
          [&](const CoordBayesSpec& s) {
            require_partition(s.pz, {s.B1, s.B2}, "coord-bayes", "p_z");
            positive(s.py, s.B1, "coord-bayes", "p_y");
            if (s.py(conj(s.B1, s.B2)) != s.pz(conj(s.B1, s.B2)))
              fail("coord-bayes", "p_y(B1 & B2) differs from p_z(B1 & B2)");
            r.check("extremal", c(s.B1) == 1 && c(s.B2) == 0);
            bool rigid = true;
            for (const auto& A : range) rigid = rigid && conditional_agrees(c, A, s.B1, cond(s.py, A, s.B1));
            r.check("x-y rigidity", rigid);
            r.check("partition", partition_under(c, {s.B1, s.B2}));
          },
          [&](const CoordJeffreySpec& s) {
            require_partition(s.pz_star, s.cells, "coord-jeffrey", "p_z*");
            for (const auto& b : s.cells) positive(s.py, b, "coord-jeffrey", "p_y");
            for (const auto& m : pairwise_meets(s.cells))
              if (s.py(m) != s.pz_star(m)) fail("coord-jeffrey", "p_y(" + render(m) + ") differs from p_z*");
            bool xz = true;
            for (const auto& b : s.cells) xz = xz && c(b) == s.pz_star(b);
            r.check("x-z rigidity", xz);
            bool rigid = true;
            for (const auto& b : s.cells) {
              // A cell the candidate gives probability 0 has no conditional.
              if (c(b) == 0) continue;
              for (const auto& A : range) rigid = rigid && conditional_agrees(c, A, b, cond(s.py, A, b));
            }
            r.check("x-y rigidity", rigid);
            r.check("partition", partition_under(c, s.cells));
          },
          [&](const AdamsSpec& s) {
            require_partition(s.pz, {s.A1, s.A2}, "adams", "p_z");
            require_partition(s.pz, {s.B1, s.B2}, "adams", "p_z");
            positive(s.py, s.A1, "adams", "p_y");
            positive(s.pz, s.A1, "adams", "p_z");
            if (s.pz(conj(s.B1, s.A1)) / s.pz(s.A1) != cond(s.py, s.B1, s.A1) ||
                s.pz(conj(s.B2, s.A1)) / s.pz(s.A1) != cond(s.py, s.B2, s.A1))
              fail("adams", "p_z(B_i | A1) differs from p_y(B_i | A1)");
            r.check("x-z rigidity (A-cells)", c(s.A1) == s.pz(s.A1) && c(s.A2) == s.pz(s.A2));
            r.check("x-y rigidity", conditional_agrees(c, s.B1, s.A1, s.new_b1) &&
                                        conditional_agrees(c, s.B2, s.A1, s.new_b2));
            bool rigid = true;
            // A cell the update empties (new_b1 of 0 or 1) has no conditionals
            // left to hold rigid; its mass is pinned by x-y rigidity instead.
            for (const auto& cell : {conj(s.A1, s.B1), conj(s.A1, s.B2), s.A2}) {
              if (c(cell) == 0) continue;
              for (const auto& C : range) rigid = rigid && conditional_agrees(c, C, cell, maybe_cond(s.pz, C, cell));
            }
            r.check("x-z rigidity (conditionals)", rigid);
            r.check("partition", partition_under(c, {conj(s.A1, s.B1), conj(s.A1, s.B2), s.A2}));
          },
      },
      spec);
  if (!std::holds_alternative<CoordSpec>(spec)) {
    const auto domain = characterization_domain(spec, base);
    std::vector<Rational> values;
    for (const auto& f : domain) values.push_back(c(f));
    r.check("axioms", ProbabilityValidator(domain).coherent(values));
  }
  return r.done();
}

}  // namespace lablogic

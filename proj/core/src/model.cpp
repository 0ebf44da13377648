#include "lablogic/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "frame_conditions.hpp"
#include "lablogic/errors.hpp"

namespace lablogic {

Model::Model(Frame frame, std::vector<Assignment> valuation) : frame_(std::move(frame)), valuation_(std::move(valuation)) {
  if (valuation_.size() != frame_.size()) {
    throw FormatError("valuation covers " + std::to_string(valuation_.size()) + " states but the frame has " +
                      std::to_string(frame_.size()));
  }
  for (const auto& [name, v] : valuation_.front()) atoms_.push_back(name);
  for (StateId s = 1; s < valuation_.size(); ++s) {
    bool same = valuation_[s].size() == atoms_.size() &&
                std::equal(atoms_.begin(), atoms_.end(), valuation_[s].begin(),
                           [](const std::string& a, const auto& entry) { return a == entry.first; });
    if (!same) throw FormatError("state \"" + frame_.name(s) + "\" values a different set of atoms");
  }
}

Profile not_profile(const Profile& a) {
  Profile out(a.size());
  std::transform(a.begin(), a.end(), out.begin(), negate);
  return out;
}

Profile and_profile(const Profile& a, const Profile& b) {
  Profile out(a.size());
  std::transform(a.begin(), a.end(), b.begin(), out.begin(), meet);
  return out;
}

Profile or_profile(const Profile& a, const Profile& b) {
  Profile out(a.size());
  std::transform(a.begin(), a.end(), b.begin(), out.begin(), join);
  return out;
}

Profile imp_profile(const Frame& f, const Profile& a, const Profile& b) {
  const std::size_t n = f.size();
  Profile out(n);
  for (StateId x = 0; x < n; ++x) {
    bool t = true;
    bool fl = false;
    for (StateId y = 0; y < n; ++y) {
      if (!a[y].t) continue;
      for (StateId z = 0; z < n; ++z) {
        if (t && f.r1(x, y, z) && !b[z].t) t = false;
        if (!fl && f.r2(x, y, z) && b[z].f) fl = true;
      }
    }
    out[x] = {t, fl};
  }
  return out;
}

Profile eval_profile(const Model& m, const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom: {
      Profile out(m.size());
      for (StateId s = 0; s < m.size(); ++s) {
        const auto& a = m.valuation(s);
        auto it = a.find(f.name());
        if (it == a.end()) throw EvalError("unbound atom \"" + f.name() + "\"");
        out[s] = it->second;
      }
      return out;
    }
    case Connective::Not:
      return not_profile(eval_profile(m, f.operand()));
    case Connective::And:
      return and_profile(eval_profile(m, f.left()), eval_profile(m, f.right()));
    case Connective::Or:
      return or_profile(eval_profile(m, f.left()), eval_profile(m, f.right()));
    case Connective::Imp:
      return imp_profile(m.frame(), eval_profile(m, f.left()), eval_profile(m, f.right()));
  }
  throw EvalError("unreachable connective");
}

TruthValue eval_model(const Model& m, StateId s, const Formula& f) {
  if (s >= m.size()) throw EvalError("state index " + std::to_string(s) + " out of range");
  return eval_profile(m, f)[s];
}

TruthValue eval_model(const Model& m, std::string_view state, const Formula& f) {
  return eval_profile(m, f)[m.frame().index(state)];
}

namespace {

std::string profile_key(const Profile& p) {
  std::string key(p.size(), '\0');
  for (std::size_t i = 0; i < p.size(); ++i) key[i] = static_cast<char>(p[i].code());
  return key;
}

}  // namespace

std::vector<PersistenceViolation> check_persistence(const Model& m, int depth) {
  const Frame& f = m.frame();
  std::vector<std::pair<Profile, Formula>> seen;
  std::set<std::string> keys;
  auto add = [&](Profile p, const Formula& witness) {
    if (keys.insert(profile_key(p)).second) seen.emplace_back(std::move(p), witness);
  };
  for (const auto& name : m.atoms()) add(eval_profile(m, atom(name)), atom(name));
  for (int d = 1; d <= depth; ++d) {
    const std::size_t count = seen.size();
    for (std::size_t i = 0; i < count; ++i) {
      // Copies: `seen` may reallocate while we append.
      Profile a = seen[i].first;
      Formula fa = seen[i].second;
      add(not_profile(a), neg(fa));
      for (std::size_t j = 0; j < count; ++j) {
        const Profile b = seen[j].first;
        const Formula fb = seen[j].second;
        add(and_profile(a, b), conj(fa, fb));
        add(or_profile(a, b), disj(fa, fb));
        add(imp_profile(f, a, b), imp(fa, fb));
      }
    }
  }

  std::vector<PersistenceViolation> out;
  std::set<std::tuple<StateId, StateId, Polarity>> reported;
  for (const auto& [p, witness] : seen) {
    for (StateId x = 0; x < f.size(); ++x)
      for (StateId y = 0; y < f.size(); ++y) {
        if (x == y || !f.leq(x, y)) continue;
        if (p[x].t && !p[y].t && reported.emplace(x, y, Polarity::T).second)
          out.push_back({x, y, witness, Polarity::T});
        if (p[x].f && !p[y].f && reported.emplace(x, y, Polarity::F).second)
          out.push_back({x, y, witness, Polarity::F});
      }
  }
  return out;
}

bool consequence_in_model(const Model& m, const std::vector<Formula>& X, const Formula& A, bool at_L_only) {
  if (X.empty() && !at_L_only) {
    throw PreconditionError("consequence in a model needs a non-empty premise set; use at_L_only for logical truth");
  }
  std::vector<Profile> premises;
  premises.reserve(X.size());
  for (const auto& b : X) premises.push_back(eval_profile(m, b));
  const Profile conclusion = eval_profile(m, A);
  for (StateId s = 0; s < m.size(); ++s) {
    if (at_L_only && !m.frame().in_L(s)) continue;
    bool all = std::all_of(premises.begin(), premises.end(), [&](const Profile& p) { return p[s].t; });
    if (all && !conclusion[s].t) return false;
  }
  return true;
}

namespace {

using detail::Tri;

// Partially decided frame: the search assigns L, then R1, then R2 cells.
struct PartialFrame {
  std::size_t n;
  std::vector<Tri> L;
  std::vector<Tri> R1;
  std::vector<Tri> R2;

  explicit PartialFrame(std::size_t states)
      : n(states), L(states, Tri::Unknown), R1(states * states * states, Tri::Unknown),
        R2(states * states * states, Tri::Unknown) {}

  std::size_t size() const { return n; }
  Tri in_L(StateId s) const { return L[s]; }
  Tri r1(StateId x, StateId y, StateId z) const { return R1[(x * n + y) * n + z]; }
  Tri r2(StateId x, StateId y, StateId z) const { return R2[(x * n + y) * n + z]; }

  Tri& bit(std::size_t i) {
    if (i < n) return L[i];
    i -= n;
    if (i < R1.size()) return R1[i];
    return R2[i - R1.size()];
  }
  std::size_t bits() const { return n + R1.size() + R2.size(); }

  Frame freeze() const {
    std::vector<StateId> l;
    std::vector<Triple> t1;
    std::vector<Triple> t2;
    for (StateId s = 0; s < n; ++s)
      if (L[s] == Tri::Yes) l.push_back(s);
    for (StateId x = 0; x < n; ++x)
      for (StateId y = 0; y < n; ++y)
        for (StateId z = 0; z < n; ++z) {
          if (r1(x, y, z) == Tri::Yes) t1.push_back({x, y, z});
          if (r2(x, y, z) == Tri::Yes) t2.push_back({x, y, z});
        }
    return Frame(n, l, t1, t2);
  }
};

class CountermodelSearch {
 public:
  CountermodelSearch(const std::vector<Formula>& premises, const Formula& conclusion, const SearchBounds& bounds)
      : premises_(premises), conclusion_(conclusion), bounds_(bounds), conditions_(bounds.conditions.checked()) {
    std::vector<Formula> all = premises;
    all.push_back(conclusion);
    for (const auto& a : atoms_of(all)) atoms_.push_back(a);
  }

  std::optional<Model> run() {
    for (std::size_t n = 1; n <= bounds_.max_states; ++n) {
      PartialFrame pf(n);
      if (frame_step(pf, 0)) return std::move(found_);
    }
    return std::nullopt;
  }

 private:
  void tick() {
    ++nodes_;
    if (bounds_.node_limit && nodes_ > *bounds_.node_limit) {
      throw SearchBoundsError("countermodel search exceeded the node limit of " + std::to_string(*bounds_.node_limit));
    }
  }

  bool consistent(const PartialFrame& pf) const {
    return std::none_of(conditions_.begin(), conditions_.end(),
                        [&](Condition c) { return detail::first_violation(c, pf).has_value(); });
  }

  bool frame_step(PartialFrame& pf, std::size_t i) {
    tick();
    if (i == pf.bits()) {
      Frame frame = pf.freeze();
      std::vector<Assignment> val(pf.n);
      for (auto& a : val)
        for (const auto& name : atoms_) a[name] = TruthValue::neither();
      return valuation_step(frame, val, 0);
    }
    for (Tri choice : {Tri::No, Tri::Yes}) {
      pf.bit(i) = choice;
      if (consistent(pf) && frame_step(pf, i + 1)) return true;
    }
    pf.bit(i) = Tri::Unknown;
    return false;
  }

  // Cell i is (state i / |atoms|, atom i % |atoms|).
  bool valuation_step(const Frame& frame, std::vector<Assignment>& val, std::size_t i) {
    tick();
    const std::size_t k = atoms_.size();
    if (i == frame.size() * k) return leaf(frame, val);
    const StateId s = i / k;
    const std::string& name = atoms_[i % k];
    for (unsigned code = 0; code < 4; ++code) {
      const TruthValue v = TruthValue::from_code(code);
      bool ok = true;
      for (StateId t = 0; t < s && ok; ++t) {
        const TruthValue w = val[t].at(name);
        if (frame.leq(t, s) && ((w.t && !v.t) || (w.f && !v.f))) ok = false;
        if (frame.leq(s, t) && ((v.t && !w.t) || (v.f && !w.f))) ok = false;
      }
      if (!ok) continue;
      val[s][name] = v;
      if (valuation_step(frame, val, i + 1)) return true;
    }
    val[s][name] = TruthValue::neither();
    return false;
  }

  bool leaf(const Frame& frame, const std::vector<Assignment>& val) {
    Model m(frame, val);
    const auto L = frame.well_behaved();
    for (const auto& p : premises_) {
      const Profile prof = eval_profile(m, p);
      if (!std::all_of(L.begin(), L.end(), [&](StateId s) { return prof[s].t; })) return false;
    }
    const Profile c = eval_profile(m, conclusion_);
    if (std::all_of(L.begin(), L.end(), [&](StateId s) { return c[s].t; })) return false;
    found_ = std::move(m);
    return true;
  }

  const std::vector<Formula>& premises_;
  const Formula& conclusion_;
  const SearchBounds& bounds_;
  std::vector<Condition> conditions_;
  std::vector<std::string> atoms_;
  std::uint64_t nodes_ = 0;
  std::optional<Model> found_;
};

}  // namespace

std::optional<Model> find_countermodel(const std::vector<Formula>& premises, const Formula& conclusion,
                                       const SearchBounds& bounds) {
  if (bounds.max_states == 0 || bounds.max_states > kMaxSearchStates) {
    throw SearchBoundsError("max_states must be between 1 and " + std::to_string(kMaxSearchStates));
  }
  return CountermodelSearch(premises, conclusion, bounds).run();
}

}  // namespace lablogic

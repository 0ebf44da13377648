#include "lablogic/generate.hpp"

#include "frame_conditions.hpp"
#include "lablogic/errors.hpp"

namespace lablogic {

namespace {

using detail::Tri;

struct MutableFrame {
  std::size_t n;
  std::vector<bool> L;
  std::vector<bool> R1;
  std::vector<bool> R2;

  std::size_t size() const { return n; }
  std::size_t cell(StateId x, StateId y, StateId z) const { return (x * n + y) * n + z; }
  static Tri of(bool b) { return b ? Tri::Yes : Tri::No; }
  Tri in_L(StateId s) const { return of(L[s]); }
  Tri r1(StateId x, StateId y, StateId z) const { return of(R1[cell(x, y, z)]); }
  Tri r2(StateId x, StateId y, StateId z) const { return of(R2[cell(x, y, z)]); }
  StateId first_L() const {
    for (StateId s = 0; s < n; ++s)
      if (L[s]) return s;
    return 0;
  }

  // Adds what the witness is missing. Returns false if nothing changed.
  void repair(Condition c, const std::vector<StateId>& w) {
    switch (c) {
      case Condition::I:
      case Condition::A:
        R1[cell(first_L(), w[0], w[0])] = true;
        break;
      case Condition::II:
        R1[cell(first_L(), w[0], w[2])] = true;
        break;
      case Condition::III:
        L[w[1]] = true;
        break;
      case Condition::IV:  // (w, x, y, z)
        R1[cell(w[0], w[2], w[3])] = true;
        break;
      case Condition::C:  // (x, y, z, w)
        R1[cell(w[3], w[1], w[2])] = true;
        break;
      case Condition::V:  // (x, w, y, z)
        R2[cell(w[1], w[2], w[3])] = true;
        break;
      case Condition::VI:
        R1[cell(w[0], w[0], w[0])] = true;
        break;
      case Condition::VII:
        R2[cell(w[0], w[0], w[0])] = true;
        break;
      case Condition::VIII:
      case Condition::E:
      case Condition::X:  // witness w = z
        R1[cell(w[0], w[2], w[2])] = true;
        break;
      case Condition::IX:  // witness w = y
        R1[cell(w[0], w[1], w[1])] = true;
        break;
      case Condition::B:  // (u, x, y, z)
        R1[cell(w[0], w[1], w[3])] = true;
        break;
      case Condition::D:  // (u, v, x)
        L[w[2]] = true;
        break;
    }
  }
};

}  // namespace

Frame random_frame(Rng& rng, std::size_t states, const ConditionSet& conditions) {
  if (states == 0) throw PreconditionError("a frame needs at least one state");
  MutableFrame mf{states, std::vector<bool>(states), std::vector<bool>(states * states * states),
                  std::vector<bool>(states * states * states)};
  std::bernoulli_distribution sparse(0.15);
  std::bernoulli_distribution half(0.5);
  for (StateId s = 0; s < states; ++s) mf.L[s] = half(rng);
  mf.L[std::uniform_int_distribution<StateId>(0, states - 1)(rng)] = true;
  for (std::size_t i = 0; i < mf.R1.size(); ++i) {
    mf.R1[i] = sparse(rng);
    mf.R2[i] = sparse(rng);
  }
  const auto checked = conditions.checked();
  for (bool changed = true; changed;) {
    changed = false;
    for (auto c : checked) {
      while (auto w = detail::first_violation(c, mf)) {
        mf.repair(c, *w);
        changed = true;
      }
    }
  }
  std::vector<StateId> l;
  std::vector<Triple> r1;
  std::vector<Triple> r2;
  for (StateId s = 0; s < states; ++s)
    if (mf.L[s]) l.push_back(s);
  for (StateId x = 0; x < states; ++x)
    for (StateId y = 0; y < states; ++y)
      for (StateId z = 0; z < states; ++z) {
        if (mf.R1[mf.cell(x, y, z)]) r1.push_back({x, y, z});
        if (mf.R2[mf.cell(x, y, z)]) r2.push_back({x, y, z});
      }
  return Frame(states, l, r1, r2);
}

Model random_model(Rng& rng, std::size_t states, const std::vector<std::string>& atoms,
                   const ConditionSet& conditions) {
  Frame f = random_frame(rng, states, conditions);
  std::uniform_int_distribution<unsigned> code(0, 3);
  std::vector<Assignment> val(states);
  for (auto& a : val)
    for (const auto& name : atoms) a[name] = TruthValue::from_code(code(rng));
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId x = 0; x < states; ++x)
      for (StateId y = 0; y < states; ++y) {
        if (x == y || !f.leq(x, y)) continue;
        for (const auto& name : atoms) {
          TruthValue lo = val[x][name];
          TruthValue& hi = val[y][name];
          TruthValue up{hi.t || lo.t, hi.f || lo.f};
          if (!(up == hi)) {
            hi = up;
            changed = true;
          }
        }
      }
  }
  return Model(std::move(f), std::move(val));
}

Formula random_formula(Rng& rng, const std::vector<std::string>& atoms, int max_depth, bool allow_implication) {
  if (atoms.empty()) throw PreconditionError("random_formula needs at least one atom");
  std::uniform_int_distribution<std::size_t> pick_atom(0, atoms.size() - 1);
  std::uniform_int_distribution<int> pick(0, allow_implication ? 4 : 3);
  const int choice = max_depth <= 0 ? 0 : pick(rng);
  switch (choice) {
    case 0:
      return atom(atoms[pick_atom(rng)]);
    case 1:
      return neg(random_formula(rng, atoms, max_depth - 1, allow_implication));
    case 2: {
      auto l = random_formula(rng, atoms, max_depth - 1, allow_implication);
      return conj(l, random_formula(rng, atoms, max_depth - 1, allow_implication));
    }
    case 3: {
      auto l = random_formula(rng, atoms, max_depth - 1, allow_implication);
      return disj(l, random_formula(rng, atoms, max_depth - 1, allow_implication));
    }
    default: {
      auto l = random_formula(rng, atoms, max_depth - 1, allow_implication);
      return imp(l, random_formula(rng, atoms, max_depth - 1, allow_implication));
    }
  }
}

}  // namespace lablogic

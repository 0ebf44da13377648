#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lablogic/formula.hpp"
#include "lablogic/frame.hpp"
#include "lablogic/truth.hpp"

namespace lablogic {

// A frame together with a four-valued atomic valuation at every state.
//
// Construction does not enforce atomic persistence; a non-model can be
// built on purpose and diagnosed with check_persistence().
class Model {
 public:
  // `valuation[s]` is the atomic valuation at state s. Every state must
  // value the same atoms. Throws FormatError otherwise.
  Model(Frame frame, std::vector<Assignment> valuation);

  const Frame& frame() const noexcept { return frame_; }
  std::size_t size() const noexcept { return frame_.size(); }
  const Assignment& valuation(StateId s) const { return valuation_.at(s); }
  const std::vector<Assignment>& valuations() const noexcept { return valuation_; }
  // Atoms valued at every state, sorted.
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }

 private:
  Frame frame_;
  std::vector<Assignment> valuation_;
  std::vector<std::string> atoms_;
};

// The value of one formula at every state, indexed by StateId.
using Profile = std::vector<TruthValue>;

// Clause-by-clause combinators on profiles over the frame of `m`.
Profile not_profile(const Profile& a);
Profile and_profile(const Profile& a, const Profile& b);
Profile or_profile(const Profile& a, const Profile& b);
// T at x iff every R1 x y z with T at y has T at z;
// F at x iff some R2 x y z has T at y and F at z.
Profile imp_profile(const Frame& f, const Profile& a, const Profile& b);

// Throws EvalError on an atom not valued in `m`.
Profile eval_profile(const Model& m, const Formula& f);

// Throws EvalError on an unknown state or unbound atom.
TruthValue eval_model(const Model& m, StateId s, const Formula& f);
TruthValue eval_model(const Model& m, std::string_view state, const Formula& f);

enum class Polarity : unsigned char { T, F };

struct PersistenceViolation {
  StateId lower;
  StateId upper;
  Formula formula;
  Polarity polarity;
};

// Checks, for every pair x <= y and every formula over the model's atoms of
// depth at most `depth`, that T (and F) membership at x carries up to y.
//
// Formulas are explored by value profile, so each distinct behaviour is
// examined once; the witness is a shallowest formula with that behaviour.
// At most one violation is reported per (x, y, polarity).
std::vector<PersistenceViolation> check_persistence(const Model& m, int depth = 3);

// at_L_only = false: X |=_m A, i.e. every state T-satisfying all of X
// T-satisfies A; X must be non-empty (PreconditionError otherwise).
// at_L_only = true: the same restricted to L; with X empty this is |=_m A.
bool consequence_in_model(const Model& m, const std::vector<Formula>& X, const Formula& A, bool at_L_only);

struct SearchBounds {
  std::size_t max_states = 3;
  // Conditions the frame must satisfy beyond i..v.
  ConditionSet conditions = ConditionSet::all_numbered();
  // Abort with SearchBoundsError after visiting this many search nodes.
  std::optional<std::uint64_t> node_limit;
};

// Largest accepted max_states.
inline constexpr std::size_t kMaxSearchStates = 5;

// Enumeration-first model (by state count, then lexicographically over L,
// R1, R2 and the valuation, absent before present) whose frame passes the
// requested conditions, whose valuation is persistent, where every premise
// is T at every L-state and the conclusion is not T at some L-state.
// Returns nullopt when the bounded space is exhausted.
// Throws SearchBoundsError when max_states is 0 or exceeds kMaxSearchStates,
// or when the node limit is hit.
std::optional<Model> find_countermodel(const std::vector<Formula>& premises, const Formula& conclusion,
                                       const SearchBounds& bounds = {});

}  // namespace lablogic

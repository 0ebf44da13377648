#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lablogic {

using StateId = std::size_t;
using Triple = std::array<StateId, 3>;

// A finite frame <S, L, <=, R1, R2>.
//
// States are indexed 0..size()-1 and carry display names. The information
// order is never supplied: x <= y holds iff R1 u x y for some u in L.
class Frame {
 public:
  // Builds from state names. Throws FormatError on duplicate or unknown names.
  Frame(std::vector<std::string> states, const std::vector<std::string>& well_behaved,
        const std::vector<std::array<std::string, 3>>& r1, const std::vector<std::array<std::string, 3>>& r2);

  // Builds from indices; states are named s0, s1, ...
  Frame(std::size_t size, const std::vector<StateId>& well_behaved, const std::vector<Triple>& r1,
        const std::vector<Triple>& r2);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(StateId s) const { return names_.at(s); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  // Throws EvalError on an unknown name.
  StateId index(std::string_view name) const;

  bool in_L(StateId s) const { return well_behaved_[s]; }
  bool r1(StateId x, StateId y, StateId z) const { return r1_[cell(x, y, z)]; }
  bool r2(StateId x, StateId y, StateId z) const { return r2_[cell(x, y, z)]; }
  bool leq(StateId x, StateId y) const { return leq_[x * size() + y]; }

  std::vector<StateId> well_behaved() const;
  std::vector<Triple> r1_triples() const;
  std::vector<Triple> r2_triples() const;

 private:
  std::size_t cell(StateId x, StateId y, StateId z) const { return (x * size() + y) * size() + z; }
  void derive();

  std::vector<std::string> names_;
  std::vector<bool> well_behaved_;
  std::vector<bool> r1_;
  std::vector<bool> r2_;
  std::vector<bool> leq_;
};

// The derived information order as (y, z) pairs, lexicographically sorted.
std::vector<std::pair<StateId, StateId>> derive_leq(const Frame& f);

// Frame conditions. I..V are always checked. VI..X are the optional
// conditions paired with the optional axioms (VI-A12, VII-A13, VIII-A14,
// IX-A15, X-A16). A..E are the motivating constraints on labs, checkable
// on their own; C coincides with IV.
enum class Condition { I, II, III, IV, V, VI, VII, VIII, IX, X, A, B, C, D, E };

inline constexpr std::size_t kConditionCount = 15;

std::string_view condition_name(Condition c);

class ConditionSet {
 public:
  // Only the always-required conditions i..v.
  ConditionSet() = default;

  static ConditionSet all_numbered();  // i..x
  // Comma-separated names ("vi,vii,x", "a,e", "all"). i..v are accepted and
  // ignored since they are always on. Throws FormatError.
  static ConditionSet parse(std::string_view list);

  ConditionSet& add(Condition c);
  bool contains(Condition c) const;
  std::vector<Condition> checked() const;  // always includes I..V
  std::string describe() const;

 private:
  std::bitset<kConditionCount> flags_;
};

struct FrameViolation {
  Condition condition;
  // Witness states in the order their variables first occur in the
  // condition, e.g. (x, w, y, z) for v).
  std::vector<StateId> witness;
};

std::string describe(const FrameViolation& v, const Frame& f);

// One violation per failing checked condition, carrying the
// lexicographically first witness. Empty iff every checked condition holds.
std::vector<FrameViolation> validate_frame(const Frame& f, const ConditionSet& conditions);

}  // namespace lablogic

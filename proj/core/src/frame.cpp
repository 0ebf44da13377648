#include "lablogic/frame.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "frame_conditions.hpp"
#include "lablogic/errors.hpp"

namespace lablogic {

namespace {

std::vector<Triple> resolve_triples(const std::vector<std::array<std::string, 3>>& named,
                                    const std::map<std::string, StateId, std::less<>>& index, const char* which) {
  std::vector<Triple> out;
  out.reserve(named.size());
  for (const auto& t : named) {
    Triple r{};
    for (std::size_t i = 0; i < 3; ++i) {
      auto it = index.find(t[i]);
      if (it == index.end()) throw FormatError(std::string(which) + " mentions unknown state \"" + t[i] + "\"");
      r[i] = it->second;
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace

Frame::Frame(std::vector<std::string> states, const std::vector<std::string>& well_behaved,
             const std::vector<std::array<std::string, 3>>& r1, const std::vector<std::array<std::string, 3>>& r2)
    : names_(std::move(states)) {
  if (names_.empty()) throw FormatError("a frame needs at least one state");
  std::map<std::string, StateId, std::less<>> index;
  for (StateId i = 0; i < names_.size(); ++i) {
    if (!index.emplace(names_[i], i).second) throw FormatError("duplicate state \"" + names_[i] + "\"");
  }
  const std::size_t n = names_.size();
  well_behaved_.assign(n, false);
  r1_.assign(n * n * n, false);
  r2_.assign(n * n * n, false);
  for (const auto& name : well_behaved) {
    auto it = index.find(name);
    if (it == index.end()) throw FormatError("L mentions unknown state \"" + name + "\"");
    well_behaved_[it->second] = true;
  }
  for (const auto& t : resolve_triples(r1, index, "R1")) r1_[cell(t[0], t[1], t[2])] = true;
  for (const auto& t : resolve_triples(r2, index, "R2")) r2_[cell(t[0], t[1], t[2])] = true;
  derive();
}

Frame::Frame(std::size_t size, const std::vector<StateId>& well_behaved, const std::vector<Triple>& r1,
             const std::vector<Triple>& r2) {
  if (size == 0) throw FormatError("a frame needs at least one state");
  for (std::size_t i = 0; i < size; ++i) names_.push_back("s" + std::to_string(i));
  well_behaved_.assign(size, false);
  r1_.assign(size * size * size, false);
  r2_.assign(size * size * size, false);
  auto check = [&](StateId s) {
    if (s >= size) throw FormatError("state index " + std::to_string(s) + " out of range");
  };
  for (auto s : well_behaved) {
    check(s);
    well_behaved_[s] = true;
  }
  for (const auto& t : r1) {
    for (auto s : t) check(s);
    r1_[cell(t[0], t[1], t[2])] = true;
  }
  for (const auto& t : r2) {
    for (auto s : t) check(s);
    r2_[cell(t[0], t[1], t[2])] = true;
  }
  derive();
}

void Frame::derive() {
  const std::size_t n = size();
  leq_.assign(n * n, false);
  for (StateId u = 0; u < n; ++u) {
    if (!well_behaved_[u]) continue;
    for (StateId y = 0; y < n; ++y)
      for (StateId z = 0; z < n; ++z)
        if (r1(u, y, z)) leq_[y * n + z] = true;
  }
}

StateId Frame::index(std::string_view name) const {
  for (StateId i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw EvalError("unknown state \"" + std::string(name) + "\"");
}

std::vector<StateId> Frame::well_behaved() const {
  std::vector<StateId> out;
  for (StateId s = 0; s < size(); ++s)
    if (well_behaved_[s]) out.push_back(s);
  return out;
}

std::vector<Triple> Frame::r1_triples() const {
  std::vector<Triple> out;
  for (StateId x = 0; x < size(); ++x)
    for (StateId y = 0; y < size(); ++y)
      for (StateId z = 0; z < size(); ++z)
        if (r1(x, y, z)) out.push_back({x, y, z});
  return out;
}

std::vector<Triple> Frame::r2_triples() const {
  std::vector<Triple> out;
  for (StateId x = 0; x < size(); ++x)
    for (StateId y = 0; y < size(); ++y)
      for (StateId z = 0; z < size(); ++z)
        if (r2(x, y, z)) out.push_back({x, y, z});
  return out;
}

std::vector<std::pair<StateId, StateId>> derive_leq(const Frame& f) {
  std::vector<std::pair<StateId, StateId>> out;
  for (StateId y = 0; y < f.size(); ++y)
    for (StateId z = 0; z < f.size(); ++z)
      if (f.leq(y, z)) out.emplace_back(y, z);
  return out;
}

std::string_view condition_name(Condition c) {
  static constexpr std::string_view names[] = {"i", "ii", "iii", "iv", "v",  "vi", "vii", "viii",
                                               "ix", "x", "a",  "b",  "c", "d",  "e"};
  return names[static_cast<std::size_t>(c)];
}

ConditionSet ConditionSet::all_numbered() {
  ConditionSet s;
  for (auto c : {Condition::VI, Condition::VII, Condition::VIII, Condition::IX, Condition::X}) s.add(c);
  return s;
}

ConditionSet ConditionSet::parse(std::string_view list) {
  ConditionSet s;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    auto comma = list.find(',', pos);
    auto item = list.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      if (item == "all") {
        s = all_numbered();
      } else {
        bool found = false;
        for (std::size_t i = 0; i < kConditionCount; ++i) {
          if (condition_name(static_cast<Condition>(i)) == item) {
            s.add(static_cast<Condition>(i));
            found = true;
            break;
          }
        }
        if (!found) throw FormatError("unknown frame condition \"" + std::string(item) + "\"");
      }
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return s;
}

ConditionSet& ConditionSet::add(Condition c) {
  flags_.set(static_cast<std::size_t>(c));
  return *this;
}

bool ConditionSet::contains(Condition c) const {
  return static_cast<std::size_t>(c) <= static_cast<std::size_t>(Condition::V) ||
         flags_.test(static_cast<std::size_t>(c));
}

std::vector<Condition> ConditionSet::checked() const {
  std::vector<Condition> out;
  for (std::size_t i = 0; i < kConditionCount; ++i)
    if (contains(static_cast<Condition>(i))) out.push_back(static_cast<Condition>(i));
  return out;
}

std::string ConditionSet::describe() const {
  std::string out;
  for (auto c : checked()) {
    if (!out.empty()) out += ',';
    out += condition_name(c);
  }
  return out;
}

std::string describe(const FrameViolation& v, const Frame& f) {
  std::ostringstream os;
  os << "condition " << condition_name(v.condition) << " fails at (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? ", " : "") << f.name(v.witness[i]);
  os << ")";
  return os.str();
}

namespace {

struct CompleteView {
  const Frame& f;
  std::size_t size() const { return f.size(); }
  static detail::Tri of(bool b) { return b ? detail::Tri::Yes : detail::Tri::No; }
  detail::Tri in_L(StateId s) const { return of(f.in_L(s)); }
  detail::Tri r1(StateId x, StateId y, StateId z) const { return of(f.r1(x, y, z)); }
  detail::Tri r2(StateId x, StateId y, StateId z) const { return of(f.r2(x, y, z)); }
};

}  // namespace

std::vector<FrameViolation> validate_frame(const Frame& f, const ConditionSet& conditions) {
  std::vector<FrameViolation> out;
  CompleteView view{f};
  for (auto c : conditions.checked()) {
    if (auto w = detail::first_violation(c, view)) out.push_back({c, std::move(*w)});
  }
  return out;
}

}  // namespace lablogic

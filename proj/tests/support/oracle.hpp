#pragma once

// Reference implementations used as test oracles. They deliberately share
// no code with the library beyond the Formula/Frame/Model containers:
// truth tables are written out literally, model evaluation recurses on the
// satisfaction clauses state by state, and assignments are enumerated by
// counting in base 4.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lablogic/formula.hpp"
#include "lablogic/frame.hpp"
#include "lablogic/model.hpp"
#include "lablogic/truth.hpp"

namespace oracle {

using lablogic::Connective;
using lablogic::Formula;
using lablogic::StateId;

// Values as strings of the set they denote: "", "T", "F", "TF".
using Val = std::string;

inline bool has_t(const Val& v) { return v.find('T') != Val::npos; }
inline bool has_f(const Val& v) { return v.find('F') != Val::npos; }

inline Val make(bool t, bool f) { return std::string(t ? "T" : "") + (f ? "F" : ""); }

// Belnap's tables, written out in full.
inline Val table_not(const Val& a) {
  static const std::map<Val, Val> t = {{"", ""}, {"T", "F"}, {"F", "T"}, {"TF", "TF"}};
  return t.at(a);
}

inline Val table_and(const Val& a, const Val& b) {
  static const std::map<std::pair<Val, Val>, Val> t = {
      {{"", ""}, ""},     {{"", "T"}, ""},     {{"", "F"}, "F"},    {{"", "TF"}, "F"},
      {{"T", ""}, ""},    {{"T", "T"}, "T"},   {{"T", "F"}, "F"},   {{"T", "TF"}, "TF"},
      {{"F", ""}, "F"},   {{"F", "T"}, "F"},   {{"F", "F"}, "F"},   {{"F", "TF"}, "F"},
      {{"TF", ""}, "F"},  {{"TF", "T"}, "TF"}, {{"TF", "F"}, "F"},  {{"TF", "TF"}, "TF"},
  };
  return t.at({a, b});
}

inline Val table_or(const Val& a, const Val& b) {
  return table_not(table_and(table_not(a), table_not(b)));
}

using Assignment = std::map<std::string, Val>;

inline Val eval(const Assignment& a, const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
      return a.at(f.name());
    case Connective::Not:
      return table_not(eval(a, f.operand()));
    case Connective::And:
      return table_and(eval(a, f.left()), eval(a, f.right()));
    case Connective::Or:
      return table_or(eval(a, f.left()), eval(a, f.right()));
    default:
      throw std::logic_error("oracle::eval on a conditional");
  }
}

// All 4^n assignments, by counting in base 4.
inline std::vector<Assignment> all_assignments(const std::vector<std::string>& atoms) {
  static const Val digits[] = {"", "T", "F", "TF"};
  std::vector<Assignment> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) total *= 4;
  for (std::uint64_t k = 0; k < total; ++k) {
    Assignment a;
    std::uint64_t rest = k;
    for (const auto& name : atoms) {
      a[name] = digits[rest % 4];
      rest /= 4;
    }
    out.push_back(a);
  }
  return out;
}

inline std::vector<std::string> atoms_in(const std::vector<Formula>& fs) {
  auto s = lablogic::atoms_of(fs);
  return {s.begin(), s.end()};
}

inline bool entails(const Formula& premise, const Formula& conclusion) {
  for (const auto& a : all_assignments(atoms_in({premise, conclusion})))
    if (has_t(eval(a, premise)) && !has_t(eval(a, conclusion))) return false;
  return true;
}

inline Assignment from_library(const lablogic::Assignment& a) {
  Assignment out;
  for (const auto& [k, v] : a) out[k] = make(v.t, v.f);
  return out;
}

// Satisfaction in a model, clause by clause, at one state.
inline Val eval(const lablogic::Model& m, StateId x, const Formula& f) {
  const auto& fr = m.frame();
  switch (f.kind()) {
    case Connective::Atom: {
      const auto v = m.valuation(x).at(f.name());
      return make(v.t, v.f);
    }
    case Connective::Not:
      return table_not(eval(m, x, f.operand()));
    case Connective::And:
      return table_and(eval(m, x, f.left()), eval(m, x, f.right()));
    case Connective::Or:
      return table_or(eval(m, x, f.left()), eval(m, x, f.right()));
    default:
      break;
  }
  bool t = true;
  bool fl = false;
  for (StateId y = 0; y < fr.size(); ++y)
    for (StateId z = 0; z < fr.size(); ++z) {
      if (fr.r1(x, y, z) && has_t(eval(m, y, f.left())) && !has_t(eval(m, z, f.right()))) t = false;
      if (fr.r2(x, y, z) && has_t(eval(m, y, f.left())) && has_f(eval(m, z, f.right()))) fl = true;
    }
  return make(t, fl);
}

inline bool valid_at_L(const lablogic::Model& m, const Formula& f) {
  for (StateId u = 0; u < m.size(); ++u)
    if (m.frame().in_L(u) && !has_t(eval(m, u, f))) return false;
  return true;
}

// Frame conditions i..x straight from their statements.
inline bool leq(const lablogic::Frame& f, StateId x, StateId y) {
  for (StateId u = 0; u < f.size(); ++u)
    if (f.in_L(u) && f.r1(u, x, y)) return true;
  return false;
}

inline bool condition_holds(const lablogic::Frame& f, int number) {
  const std::size_t n = f.size();
  for (StateId x = 0; x < n; ++x)
    for (StateId y = 0; y < n; ++y)
      for (StateId z = 0; z < n; ++z) {
        auto exists_w = [&](auto pred) {
          for (StateId w = 0; w < n; ++w)
            if (pred(w)) return true;
          return false;
        };
        switch (number) {
          case 1:
            if (!leq(f, x, x)) return false;
            break;
          case 2:
            if (leq(f, x, y) && leq(f, y, z) && !leq(f, x, z)) return false;
            break;
          case 3:
            if (f.in_L(x) && leq(f, x, y) && !f.in_L(y)) return false;
            break;
          case 4:
            for (StateId w = 0; w < n; ++w)
              if (leq(f, w, x) && f.r1(x, y, z) && !f.r1(w, y, z)) return false;
            break;
          case 5:
            for (StateId w = 0; w < n; ++w)
              if (leq(f, x, w) && f.r2(x, y, z) && !f.r2(w, y, z)) return false;
            break;
          case 6:
            if (!f.r1(x, x, x)) return false;
            break;
          case 7:
            if (!f.r2(x, x, x)) return false;
            break;
          case 8:
            if (f.r1(x, y, z) && !exists_w([&](StateId w) { return f.r1(x, y, w) && f.r1(x, w, z); })) return false;
            break;
          case 9:
            if (f.r2(x, y, z) && !exists_w([&](StateId w) { return f.r1(x, y, w) && f.r2(x, w, z); })) return false;
            break;
          case 10:
            if (f.r2(x, y, z) && !exists_w([&](StateId w) { return f.r2(x, y, w) && f.r1(x, z, w); })) return false;
            break;
          default:
            throw std::logic_error("no such condition");
        }
      }
  return true;
}

// Probability of f under masses on assignments, by scanning every
// assignment and looking its mass up.
inline mpq_class probability(const std::vector<std::string>& atoms,
                             const std::vector<std::pair<lablogic::Assignment, mpq_class>>& masses, const Formula& f) {
  std::map<Assignment, mpq_class> mass;
  for (const auto& [a, w] : masses) mass[from_library(a)] += w;
  mpq_class total = 0;
  for (const auto& a : all_assignments(atoms)) {
    auto it = mass.find(a);
    if (it != mass.end() && has_t(eval(a, f))) total += it->second;
  }
  return total;
}

}  // namespace oracle

#pragma once

// Frame conditions evaluated over a possibly partial frame.
//
// A view answers membership queries with Tri::Yes, Tri::No or Tri::Unknown.
// A condition is reported violated only when the violation is already
// decided: every premise is Yes and the conclusion is No (for an
// existential conclusion, every candidate is No). On a complete frame this
// is ordinary checking; on a partial frame it is a sound pruning test.

#include <optional>
#include <vector>

#include "lablogic/frame.hpp"

namespace lablogic::detail {

enum class Tri : unsigned char { No = 0, Yes = 1, Unknown = 2 };

inline bool yes(Tri t) { return t == Tri::Yes; }
inline bool no(Tri t) { return t == Tri::No; }

template <class View>
Tri leq3(const View& v, StateId x, StateId y) {
  bool unknown = false;
  for (StateId u = 0; u < v.size(); ++u) {
    Tri in_l = v.in_L(u);
    Tri rel = v.r1(u, x, y);
    if (yes(in_l) && yes(rel)) return Tri::Yes;
    if (!no(in_l) && !no(rel)) unknown = true;
  }
  return unknown ? Tri::Unknown : Tri::No;
}

// Returns the first witness, in the condition's variable order, of a
// decided violation.
template <class View>
std::optional<std::vector<StateId>> first_violation(Condition c, const View& v) {
  const StateId n = v.size();
  auto leq = [&](StateId a, StateId b) { return leq3(v, a, b); };
  using W = std::vector<StateId>;

  switch (c) {
    case Condition::I:
    case Condition::A:
      // x <= x, i.e. some u in L has R1 u x x.
      for (StateId x = 0; x < n; ++x)
        if (no(leq(x, x))) return W{x};
      return std::nullopt;

    case Condition::II:
      for (StateId x = 0; x < n; ++x)
        for (StateId y = 0; y < n; ++y) {
          if (!yes(leq(x, y))) continue;
          for (StateId z = 0; z < n; ++z)
            if (yes(leq(y, z)) && no(leq(x, z))) return W{x, y, z};
        }
      return std::nullopt;

    case Condition::III:
      for (StateId x = 0; x < n; ++x) {
        if (!yes(v.in_L(x))) continue;
        for (StateId y = 0; y < n; ++y)
          if (yes(leq(x, y)) && no(v.in_L(y))) return W{x, y};
      }
      return std::nullopt;

    case Condition::IV:
      // if w <= x and R1 x y z then R1 w y z
      for (StateId w = 0; w < n; ++w)
        for (StateId x = 0; x < n; ++x) {
          if (!yes(leq(w, x))) continue;
          for (StateId y = 0; y < n; ++y)
            for (StateId z = 0; z < n; ++z)
              if (yes(v.r1(x, y, z)) && no(v.r1(w, y, z))) return W{w, x, y, z};
        }
      return std::nullopt;

    case Condition::C:
      // if R1 x y z and w <= x then R1 w y z
      for (StateId x = 0; x < n; ++x)
        for (StateId y = 0; y < n; ++y)
          for (StateId z = 0; z < n; ++z) {
            if (!yes(v.r1(x, y, z))) continue;
            for (StateId w = 0; w < n; ++w)
              if (yes(leq(w, x)) && no(v.r1(w, y, z))) return W{x, y, z, w};
          }
      return std::nullopt;

    case Condition::V:
      // if x <= w and R2 x y z then R2 w y z
      for (StateId x = 0; x < n; ++x)
        for (StateId w = 0; w < n; ++w) {
          if (!yes(leq(x, w))) continue;
          for (StateId y = 0; y < n; ++y)
            for (StateId z = 0; z < n; ++z)
              if (yes(v.r2(x, y, z)) && no(v.r2(w, y, z))) return W{x, w, y, z};
        }
      return std::nullopt;

    case Condition::VI:
      for (StateId x = 0; x < n; ++x)
        if (no(v.r1(x, x, x))) return W{x};
      return std::nullopt;

    case Condition::VII:
      for (StateId x = 0; x < n; ++x)
        if (no(v.r2(x, x, x))) return W{x};
      return std::nullopt;

    case Condition::VIII:
    case Condition::IX:
    case Condition::X:
    case Condition::E:
      for (StateId x = 0; x < n; ++x)
        for (StateId y = 0; y < n; ++y)
          for (StateId z = 0; z < n; ++z) {
            const bool premise = (c == Condition::VIII || c == Condition::E) ? yes(v.r1(x, y, z)) : yes(v.r2(x, y, z));
            if (!premise) continue;
            bool refuted = true;
            for (StateId w = 0; w < n && refuted; ++w) {
              Tri first = Tri::No;
              Tri second = Tri::No;
              switch (c) {
                case Condition::VIII:  // R1 x y w and R1 x w z
                  first = v.r1(x, y, w);
                  second = v.r1(x, w, z);
                  break;
                case Condition::E:  // R1 x w z and R1 x y w
                  first = v.r1(x, w, z);
                  second = v.r1(x, y, w);
                  break;
                case Condition::IX:  // R1 x y w and R2 x w z
                  first = v.r1(x, y, w);
                  second = v.r2(x, w, z);
                  break;
                default:  // X: R2 x y w and R1 x z w
                  first = v.r2(x, y, w);
                  second = v.r1(x, z, w);
                  break;
              }
              if (!no(first) && !no(second)) refuted = false;
            }
            if (refuted) return W{x, y, z};
          }
      return std::nullopt;

    case Condition::B:
      // if u in L, R1 u x y and y <= z then R1 u x z
      for (StateId u = 0; u < n; ++u) {
        if (!yes(v.in_L(u))) continue;
        for (StateId x = 0; x < n; ++x)
          for (StateId y = 0; y < n; ++y) {
            if (!yes(v.r1(u, x, y))) continue;
            for (StateId z = 0; z < n; ++z)
              if (yes(leq(y, z)) && no(v.r1(u, x, z))) return W{u, x, y, z};
          }
      }
      return std::nullopt;

    case Condition::D:
      // if u, v in L and R1 u v x then x in L
      for (StateId u = 0; u < n; ++u) {
        if (!yes(v.in_L(u))) continue;
        for (StateId w = 0; w < n; ++w) {
          if (!yes(v.in_L(w))) continue;
          for (StateId x = 0; x < n; ++x)
            if (yes(v.r1(u, w, x)) && no(v.in_L(x))) return W{u, w, x};
        }
      }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace lablogic::detail

#include "lablogic/betting.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lablogic/errors.hpp"

namespace lablogic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Rational with_sign(const Rational& magnitude, int sign) {
  Rational m = abs(magnitude);
  return sign < 0 ? Rational(-m) : m;
}

std::string q(const Rational& r) { return to_string(r); }

std::vector<std::string> atom_list(const std::vector<Bet>& bets) {
  std::set<std::string> names;
  for (const auto& b : bets) {
    auto t = atoms_of(b.target);
    names.insert(t.begin(), t.end());
    if (b.condition) {
      auto c = atoms_of(*b.condition);
      names.insert(c.begin(), c.end());
    }
  }
  return {names.begin(), names.end()};
}

Rational net_gain(const std::vector<Bet>& bets, const Assignment& a) {
  Rational total = 0;
  for (const auto& b : bets) total += bet_gain(b, a);
  return total;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError("quotients do not violate the axiom: " + what);
}

}  // namespace

std::string_view to_string(BetKind k) {
  switch (k) {
    case BetKind::Plain:
      return "plain";
    case BetKind::Conditional:
      return "conditional";
    case BetKind::Reversed:
      return "reversed";
    case BetKind::ReversedConditional:
      return "reversed-conditional";
  }
  return "plain";
}

BetKind parse_bet_kind(std::string_view s) {
  if (s == "plain") return BetKind::Plain;
  if (s == "conditional") return BetKind::Conditional;
  if (s == "reversed") return BetKind::Reversed;
  if (s == "reversed-conditional") return BetKind::ReversedConditional;
  throw FormatError("unknown bet kind \"" + std::string(s) + "\"");
}

Bet Bet::plain(Formula target, Rational quotient, Rational stake) {
  return Bet{BetKind::Plain, std::move(target), std::nullopt, std::move(quotient), std::move(stake)};
}

Bet Bet::conditional(Formula target, Formula condition, Rational quotient, Rational stake) {
  return Bet{BetKind::Conditional, std::move(target), std::move(condition), std::move(quotient), std::move(stake)};
}

Bet Bet::reversed(Formula target, Rational quotient, Rational stake) {
  return Bet{BetKind::Reversed, std::move(target), std::nullopt, std::move(quotient), std::move(stake)};
}

Bet Bet::reversed_conditional(Formula target, Formula condition, Rational quotient, Rational stake) {
  return Bet{BetKind::ReversedConditional, std::move(target), std::move(condition), std::move(quotient),
             std::move(stake)};
}

void Bet::validate() const {
  if (is_conditional() != condition.has_value())
    throw FormatError(is_conditional() ? "conditional bet without a condition"
                                       : "unconditional bet with a condition");
  if (contains_implication(target) || (condition && contains_implication(*condition)))
    throw FormatError("bets are on conditional-free formulas");
}

Rational bet_gain(const Bet& b, const Assignment& a) {
  b.validate();
  if (b.condition && !eval_formula(a, *b.condition).designated()) return 0;
  const bool hit = eval_formula(a, b.target).designated();
  const bool reversed = b.kind == BetKind::Reversed || b.kind == BetKind::ReversedConditional;
  if (hit != reversed) return (1 - b.quotient) * b.stake;
  return -b.quotient * b.stake;
}

Rational GainProfile::max() const {
  auto it = std::max_element(gains.begin(), gains.end(),
                             [](const auto& x, const auto& y) { return x.second < y.second; });
  return it == gains.end() ? Rational(0) : it->second;
}

Rational GainProfile::min() const {
  auto it = std::min_element(gains.begin(), gains.end(),
                             [](const auto& x, const auto& y) { return x.second < y.second; });
  return it == gains.end() ? Rational(0) : it->second;
}

GainProfile net_gain_profile(const std::vector<Bet>& bets) {
  for (const auto& b : bets) b.validate();
  GainProfile out;
  out.atoms = atom_list(bets);
  for_each_assignment(out.atoms, [&](const Assignment& a) {
    out.gains.emplace_back(a, net_gain(bets, a));
    return true;
  });
  return out;
}

DutchBookResult is_dutch_book(const std::vector<Bet>& bets) {
  auto profile = net_gain_profile(bets);
  auto hi = profile.max();
  return {hi < 0, hi, profile.min()};
}

std::string axiom_of(const ViolationDescriptor& v) {
  return std::visit(overloaded{
                        [](const violation::Range&) { return std::string("i"); },
                        [](const violation::TwoQuotient&) { return std::string("i"); },
                        [](const violation::Monotonicity&) { return std::string("ii"); },
                        [](const violation::Additivity&) { return std::string("iii"); },
                        [](const violation::Conditional&) { return std::string("iv"); },
                        [](const violation::Diachronic&) { return std::string("diachronic"); },
                    },
                    v);
}

std::string describe(const ViolationDescriptor& v) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const violation::Range& d) {
                   os << "axiom i: q(" << render(d.A) << ") = " << q(d.p) << " lies outside [0, 1]";
                 },
                 [&](const violation::TwoQuotient& d) {
                   os << "axiom i: two quotients " << q(d.p) << " and " << q(d.q) << " on " << render(d.A);
                 },
                 [&](const violation::Monotonicity& d) {
                   os << "axiom ii: " << render(d.A) << " entails " << render(d.B) << " but q(" << render(d.A)
                      << ") = " << q(d.p) << " > " << q(d.q) << " = q(" << render(d.B) << ")";
                 },
                 [&](const violation::Additivity& d) {
                   os << "axiom iii: q(" << render(d.A) << ") + q(" << render(d.B) << ") = " << q(d.p + d.q)
                      << " but q(" << render(conj(d.A, d.B)) << ") + q(" << render(disj(d.A, d.B))
                      << ") = " << q(d.r + d.s);
                 },
                 [&](const violation::Conditional& d) {
                   os << "axiom iv: q(" << render(d.B) << ") * q(" << render(d.A) << " | " << render(d.B)
                      << ") = " << q(d.p * d.r) << " but q(" << render(conj(d.A, d.B)) << ") = " << q(d.q);
                 },
                 [&](const violation::Diachronic& d) {
                   os << "diachronic: announced update quotient " << q(d.r) << " for " << render(d.A) << " on "
                      << render(d.B) << " differs from " << q(d.q / d.p);
                 },
             },
             v);
  return os.str();
}

std::vector<Bet> construct_violation_stakes(const ViolationDescriptor& v, const Rational& scale) {
  if (scale == 0) throw PreconditionError("stake scale must be non-zero");
  return std::visit(
      overloaded{
          [&](const violation::Range& d) {
            require(d.p < 0 || d.p > 1, "quotient within [0, 1]");
            return std::vector<Bet>{Bet::plain(d.A, d.p, with_sign(scale, d.p < 0 ? -1 : 1))};
          },
          [&](const violation::TwoQuotient& d) {
            require(d.p != d.q, "equal quotients");
            Rational S = with_sign(scale, sgn(d.p - d.q));
            return std::vector<Bet>{Bet::plain(d.A, d.p, S), Bet::plain(d.A, d.q, -S)};
          },
          [&](const violation::Monotonicity& d) {
            require(d.p > d.q, "q(A) <= q(B)");
            require(fde_entails(d.A, d.B), render(d.A) + " does not entail " + render(d.B));
            Rational S = with_sign(scale, 1);
            return std::vector<Bet>{Bet::plain(d.A, d.p, S), Bet::plain(d.B, d.q, -S)};
          },
          [&](const violation::Additivity& d) {
            Rational diff = (d.p + d.q) - (d.r + d.s);
            require(diff != 0, "p + q = r + s");
            Rational S = with_sign(scale, sgn(diff));
            return std::vector<Bet>{Bet::plain(d.A, d.p, S), Bet::plain(d.B, d.q, S),
                                    Bet::plain(conj(d.A, d.B), d.r, -S), Bet::plain(disj(d.A, d.B), d.s, -S)};
          },
          [&](const violation::Conditional& d) {
            Rational diff = d.p * d.r - d.q;
            require(diff != 0, "pr = q");
            Rational S = with_sign(scale, sgn(diff));
            return std::vector<Bet>{Bet::plain(d.B, d.p, d.r * S), Bet::plain(conj(d.A, d.B), d.q, -S),
                                    Bet::conditional(d.A, d.B, d.r, S)};
          },
          [&](const violation::Diachronic& d) {
            if (!(d.p > d.q && d.q > 0)) throw PreconditionError("the diachronic recipe needs p > q > 0");
            Rational diff = d.p * d.r - d.q;
            require(diff != 0, "r = q/p");
            Rational S = with_sign(scale, sgn(diff));
            // The later bet on A, placed after learning B, is settled exactly
            // like a conditional bet on A given B.
            return std::vector<Bet>{Bet::plain(d.B, d.p, d.r * S), Bet::plain(conj(d.A, d.B), d.q, -S),
                                    Bet::conditional(d.A, d.B, d.r, S)};
          },
      },
      v);
}

std::optional<ViolationDescriptor> find_quote_violation(const QuoteBook& quotes) {
  const auto& qs = quotes.quotients;
  for (const auto& [f, p] : qs)
    if (p < 0 || p > 1) return violation::Range{f, p};
  for (const auto& c : quotes.conditional)
    if (c.value < 0 || c.value > 1) return violation::Range{c.target, c.value};

  for (const auto& [a, p] : qs)
    for (const auto& [b, qb] : qs)
      if (!(a == b) && p > qb && fde_entails(a, b)) return violation::Monotonicity{a, b, p, qb};

  for (const auto& [a, p] : qs)
    for (const auto& [b, qb] : qs) {
      if (!(a < b)) continue;
      auto m = qs.find(conj(a, b));
      auto j = qs.find(disj(a, b));
      if (m == qs.end() || j == qs.end()) continue;
      if (p + qb != m->second + j->second) return violation::Additivity{a, b, p, qb, m->second, j->second};
    }

  for (const auto& c : quotes.conditional) {
    auto b = qs.find(c.condition);
    auto m = qs.find(conj(c.target, c.condition));
    if (b == qs.end() || m == qs.end()) continue;
    if (b->second * c.value != m->second)
      return violation::Conditional{c.target, c.condition, b->second, m->second, c.value};
  }
  return std::nullopt;
}

Rational expected_net_gain(const StateDistribution& d, const std::vector<Bet>& bets) {
  for (const auto& b : bets) b.validate();
  Rational total = 0;
  for (const auto& [a, mass] : d.support()) total += mass * net_gain(bets, a);
  return total;
}

}  // namespace lablogic

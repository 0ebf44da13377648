#include "lablogic/labsim.hpp"

#include <set>
#include <sstream>
#include <unordered_map>

#include "lablogic/errors.hpp"

namespace lablogic {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

Formula implication_or_throw(const Formula& f) {
  if (!f.is_implication()) throw PreconditionError("expected a conditional, got " + render(f));
  return f;
}

}  // namespace

void TrialStream::validate() const {
  for (const auto& name : atoms)
    if (!is_valid_atom_name(name)) throw FormatError("invalid atom name \"" + name + "\"");
  for (std::size_t i = 0; i < trials.size(); ++i) {
    const auto& t = trials[i];
    bool ok = t.size() == atoms.size();
    for (const auto& name : atoms) ok = ok && t.count(name) == 1;
    if (!ok) throw FormatError("trial " + std::to_string(i + 1) + " does not value exactly the declared atoms");
  }
}

TrialStream parse_trials(std::string_view text) {
  TrialStream ts;
  bool header = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    auto tokens = split_ws(strip_comment(raw));
    if (tokens.empty()) continue;
    if (!header) {
      ts.atoms = tokens;
      header = true;
      std::set<std::string> distinct(tokens.begin(), tokens.end());
      if (distinct.size() != tokens.size()) throw FormatError("duplicate atom in trial header");
      continue;
    }
    if (tokens.size() != ts.atoms.size())
      throw FormatError("line " + std::to_string(line_no) + ": expected " + std::to_string(ts.atoms.size()) +
                        " values, found " + std::to_string(tokens.size()));
    Assignment a;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      try {
        a[ts.atoms[i]] = parse_truth_value(tokens[i]);
      } catch (const FormatError& e) {
        throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    ts.trials.push_back(std::move(a));
  }
  if (!header) throw FormatError("trial file has no atom header");
  ts.validate();
  return ts;
}

std::string render(const TrialStream& ts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ts.atoms.size(); ++i) os << (i ? " " : "") << ts.atoms[i];
  os << '\n';
  for (const auto& t : ts.trials) {
    for (std::size_t i = 0; i < ts.atoms.size(); ++i) os << (i ? " " : "") << to_token(t.at(ts.atoms[i]));
    os << '\n';
  }
  return os.str();
}

TrialStream sample_trials(const StateDistribution& d, std::size_t n, std::uint64_t seed) {
  // Integer weights over a common denominator.
  mpz_class denom = 1;
  for (const auto& [a, m] : d.support()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), m.get_den_mpz_t());
  std::vector<mpz_class> cumulative;
  mpz_class running = 0;
  for (const auto& [a, m] : d.support()) {
    running += m.get_num() * (denom / m.get_den());
    cumulative.push_back(running);
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(mpz_class(std::to_string(seed)));
  TrialStream ts{d.atoms(), {}};
  ts.trials.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_class draw = rng.get_z_range(denom);
    std::size_t k = 0;
    while (cumulative[k] <= draw) ++k;
    ts.trials.push_back(d.support()[k].first);
  }
  return ts;
}

FrequencyCounter::FrequencyCounter(std::vector<Formula> formulas)
    : formulas_(std::move(formulas)), t_(formulas_.size()), f_(formulas_.size()) {
  for (const auto& f : formulas_)
    if (contains_implication(f)) throw EvalError("frequencies of conditionals need a model: " + render(f));
}

void FrequencyCounter::add(const Assignment& trial) {
  for (std::size_t i = 0; i < formulas_.size(); ++i) {
    const TruthValue v = eval_formula(trial, formulas_[i]);
    if (v.t) ++t_[i];
    if (v.f) ++f_[i];
  }
  ++n_;
}

std::vector<Rational> FrequencyCounter::rfreq() const {
  if (n_ == 0) throw PreconditionError("relative frequency of an empty stream");
  std::vector<Rational> out;
  out.reserve(t_.size());
  for (auto c : t_) out.emplace_back(mpz_class(std::to_string(c)), mpz_class(std::to_string(n_)));
  for (auto& q : out) q.canonicalize();
  return out;
}

FrequencyTable::FrequencyTable(std::vector<Formula> formulas, std::vector<std::uint64_t> freq,
                               std::vector<std::uint64_t> neg_freq, std::size_t n)
    : formulas_(std::move(formulas)), freq_(std::move(freq)), neg_freq_(std::move(neg_freq)), n_(n) {
  if (freq_.size() != formulas_.size() || neg_freq_.size() != formulas_.size())
    throw PreconditionError("frequency vectors do not match the formula list");
}

std::size_t FrequencyTable::position(const Formula& A) const {
  for (std::size_t i = 0; i < formulas_.size(); ++i)
    if (formulas_[i] == A) return i;
  throw EvalError("no frequency recorded for " + render(A));
}

std::uint64_t FrequencyTable::freq(const Formula& A) const { return freq_[position(A)]; }
std::uint64_t FrequencyTable::neg_freq(const Formula& A) const { return neg_freq_[position(A)]; }

Rational FrequencyTable::rfreq(const Formula& A) const {
  if (n_ == 0) throw PreconditionError("relative frequency of an empty stream");
  Rational r(mpz_class(std::to_string(freq(A))), mpz_class(std::to_string(n_)));
  r.canonicalize();
  return r;
}

Rational FrequencyTable::neg_rfreq(const Formula& A) const {
  if (n_ == 0) throw PreconditionError("relative frequency of an empty stream");
  Rational r(mpz_class(std::to_string(neg_freq(A))), mpz_class(std::to_string(n_)));
  r.canonicalize();
  return r;
}

Rational FrequencyTable::conditional_rfreq(const Formula& A, const Formula& B) const {
  const auto fb = freq(B);
  const auto fab = freq(conj(A, B));
  if (fb == 0) throw UndefinedConditional("freq(" + render(B) + ") = 0");
  Rational r(mpz_class(std::to_string(fab)), mpz_class(std::to_string(fb)));
  r.canonicalize();
  return r;
}

FormulaValues FrequencyTable::values() const {
  FormulaValues out;
  for (const auto& f : formulas_) out.emplace(f, rfreq(f));
  return out;
}

FrequencyTable run_trials(const TrialStream& ts, const std::vector<Formula>& formulas) {
  ts.validate();
  FrequencyCounter counter(formulas);
  for (const auto& t : ts.trials) counter.add(t);
  std::vector<std::uint64_t> t;
  std::vector<std::uint64_t> f;
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    t.push_back(counter.freq(i));
    f.push_back(counter.neg_freq(i));
  }
  return FrequencyTable(formulas, std::move(t), std::move(f), counter.trials());
}

std::string_view to_string(NegatedMode m) { return m == NegatedMode::AsWritten ? "as-written" : "conjunctive"; }

NegatedMode parse_negated_mode(std::string_view s) {
  if (s == "as-written") return NegatedMode::AsWritten;
  if (s == "conjunctive") return NegatedMode::Conjunctive;
  throw FormatError("unknown mode \"" + std::string(s) + "\" (expected as-written or conjunctive)");
}

Rational conditional_rfreq(const Model& m, StateId x, const Formula& f) {
  implication_or_throw(f);
  if (x >= m.size()) throw EvalError("unknown state " + std::to_string(x));
  const Profile a = eval_profile(m, f.left());
  const Profile b = eval_profile(m, f.right());
  const Frame& fr = m.frame();
  std::size_t pairs = 0;
  std::size_t hits = 0;
  for (StateId y = 0; y < m.size(); ++y)
    for (StateId z = 0; z < m.size(); ++z) {
      if (!fr.r1(x, y, z)) continue;
      ++pairs;
      if (!a[y].t || b[z].t) ++hits;
    }
  if (pairs == 0) throw PreconditionError("state " + fr.name(x) + " has no R1 pairs");
  Rational r(static_cast<unsigned long>(hits), static_cast<unsigned long>(pairs));
  r.canonicalize();
  return r;
}

Rational negated_conditional_rfreq(const Model& m, StateId x, const Formula& f, NegatedMode mode) {
  implication_or_throw(f);
  if (x >= m.size()) throw EvalError("unknown state " + std::to_string(x));
  const Profile a = eval_profile(m, f.left());
  const Profile b = eval_profile(m, f.right());
  const Frame& fr = m.frame();
  std::size_t pairs = 0;
  std::size_t hits = 0;
  for (StateId y = 0; y < m.size(); ++y)
    for (StateId z = 0; z < m.size(); ++z) {
      if (!fr.r2(x, y, z)) continue;
      ++pairs;
      const bool ok = mode == NegatedMode::AsWritten ? (!a[y].t || b[z].f) : (a[y].t && b[z].f);
      if (ok) ++hits;
    }
  if (pairs == 0) throw PreconditionError("state " + fr.name(x) + " has no R2 pairs");
  Rational r(static_cast<unsigned long>(hits), static_cast<unsigned long>(pairs));
  r.canonicalize();
  return r;
}

}  // namespace lablogic

#include "lablogic/io.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "lablogic/errors.hpp"

namespace lablogic {

namespace {

using json = nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw FormatError(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string text_of(const json& j, const std::string& what) {
  if (!j.is_string()) throw FormatError(what + " must be a string");
  return j.get<std::string>();
}

Rational rational_of(const json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number()) return parse_rational(j.dump());
  throw FormatError(what + " must be a rational (\"a/b\" or a number)");
}

Formula formula_of(const json& j, const std::string& what) { return parse(text_of(j, what)); }

TruthValue value_of(const json& j, const std::string& what) { return parse_truth_value(text_of(j, what)); }

// A state reference by name or by index.
std::string state_of(const json& j, const std::vector<std::string>& names) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_unsigned() || j.is_number_integer()) {
    auto k = j.get<long long>();
    if (k < 0 || static_cast<std::size_t>(k) >= names.size())
      throw FormatError("state index " + std::to_string(k) + " out of range");
    return names[static_cast<std::size_t>(k)];
  }
  throw FormatError("a state is a name or an index");
}

std::vector<std::string> state_names(const json& j) {
  const json& s = field(j, "states");
  std::vector<std::string> names;
  if (s.is_number_unsigned()) {
    for (std::size_t i = 0; i < s.get<std::size_t>(); ++i) names.push_back("s" + std::to_string(i));
  } else if (s.is_array()) {
    for (const auto& e : s) names.push_back(text_of(e, "state name"));
  } else {
    throw FormatError("\"states\" must be a list of names or a count");
  }
  return names;
}

std::vector<std::array<std::string, 3>> triples_of(const json& j, const char* key,
                                                   const std::vector<std::string>& names) {
  const json& list = field(j, key);
  if (!list.is_array()) throw FormatError(std::string("\"") + key + "\" must be a list of triples");
  std::vector<std::array<std::string, 3>> out;
  for (const auto& t : list) {
    if (!t.is_array() || t.size() != 3) throw FormatError(std::string("\"") + key + "\" entries must be triples");
    out.push_back({state_of(t[0], names), state_of(t[1], names), state_of(t[2], names)});
  }
  return out;
}

Frame frame_of(const json& j) {
  auto names = state_names(j);
  const json& l = field(j, "L");
  if (!l.is_array()) throw FormatError("\"L\" must be a list of states");
  std::vector<std::string> well;
  for (const auto& s : l) well.push_back(state_of(s, names));
  auto r1 = triples_of(j, "R1", names);
  auto r2 = triples_of(j, "R2", names);
  return Frame(std::move(names), well, r1, r2);
}

Assignment assignment_of(const json& j) {
  if (!j.is_object()) throw FormatError("an assignment is an object from atoms to values");
  Assignment a;
  for (const auto& [atom_name, v] : j.items()) {
    if (!is_valid_atom_name(atom_name)) throw FormatError("invalid atom name \"" + atom_name + "\"");
    a[atom_name] = value_of(v, "value of " + atom_name);
  }
  return a;
}

std::vector<std::string> atoms_field(const json& j) {
  const json& a = field(j, "atoms");
  if (!a.is_array()) throw FormatError("\"atoms\" must be a list");
  std::vector<std::string> out;
  for (const auto& e : a) out.push_back(text_of(e, "atom"));
  return out;
}

StateDistribution distribution_of(const json& j) {
  auto atoms = atoms_field(j);
  const json& m = field(j, "masses");
  if (!m.is_array()) throw FormatError("\"masses\" must be a list");
  std::vector<WeightedAssignment> masses;
  for (const auto& e : m) masses.emplace_back(assignment_of(field(e, "assignment")), rational_of(field(e, "mass"), "mass"));
  return StateDistribution(std::move(atoms), std::move(masses));
}

json assignment_json(const std::vector<std::string>& atoms, const Assignment& a) {
  json out = json::object();
  for (const auto& name : atoms) out[name] = std::string(to_token(a.at(name)));
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Frame parse_frame(std::string_view text) { return frame_of(parse_json(text)); }

Model parse_model(std::string_view text) {
  const json j = parse_json(text);
  Frame frame = frame_of(j);
  const json& v = field(j, "valuation");
  if (!v.is_object()) throw FormatError("\"valuation\" must map states to assignments");
  std::vector<Assignment> val(frame.size());
  std::vector<bool> seen(frame.size());
  for (const auto& [state, assignment] : v.items()) {
    StateId s;
    try {
      s = frame.index(state);
    } catch (const EvalError&) {
      throw FormatError("valuation names unknown state \"" + state + "\"");
    }
    val[s] = assignment_of(assignment);
    seen[s] = true;
  }
  for (StateId s = 0; s < frame.size(); ++s)
    if (!seen[s]) throw FormatError("no valuation for state \"" + frame.name(s) + "\"");
  return Model(std::move(frame), std::move(val));
}

std::string write_model(const Model& m) {
  const Frame& f = m.frame();
  json j;
  j["states"] = f.names();
  json l = json::array();
  for (auto s : f.well_behaved()) l.push_back(f.name(s));
  j["L"] = l;
  auto triples = [&](const std::vector<Triple>& ts) {
    json out = json::array();
    for (const auto& t : ts) out.push_back({f.name(t[0]), f.name(t[1]), f.name(t[2])});
    return out;
  };
  j["R1"] = triples(f.r1_triples());
  j["R2"] = triples(f.r2_triples());
  json v = json::object();
  for (StateId s = 0; s < m.size(); ++s) v[f.name(s)] = assignment_json(m.atoms(), m.valuation(s));
  j["valuation"] = v;
  return j.dump(2) + "\n";
}

StateDistribution parse_distribution(std::string_view text) { return distribution_of(parse_json(text)); }

std::string write_distribution(const std::vector<std::string>& atoms, const std::vector<WeightedAssignment>& masses) {
  json j;
  j["atoms"] = atoms;
  json m = json::array();
  for (const auto& [a, w] : masses) m.push_back({{"assignment", assignment_json(atoms, a)}, {"mass", to_string(w)}});
  j["masses"] = m;
  return j.dump(2) + "\n";
}

std::vector<Bet> parse_bets(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_array()) throw FormatError("a bet file is a list of bets");
  std::vector<Bet> out;
  for (const auto& e : j) {
    Bet b{parse_bet_kind(text_of(field(e, "kind"), "kind")), formula_of(field(e, "target"), "target"), std::nullopt,
          rational_of(field(e, "quotient"), "quotient"), rational_of(field(e, "stake"), "stake")};
    if (e.contains("condition")) b.condition = formula_of(e.at("condition"), "condition");
    b.validate();
    out.push_back(std::move(b));
  }
  return out;
}

QuoteBook parse_quotes(std::string_view text) {
  const json j = parse_json(text);
  QuoteBook book;
  const json& q = j.is_object() && j.contains("values") ? j.at("values") : field(j, "quotients");
  if (!q.is_object()) throw FormatError("\"quotients\" must map formulas to values");
  for (const auto& [f, v] : q.items()) {
    Formula formula = parse(f);
    if (contains_implication(formula)) throw FormatError("quotients are for conditional-free formulas: " + f);
    if (!book.quotients.emplace(formula, rational_of(v, "quotient for " + f)).second)
      throw FormatError("two quotients for " + render(formula));
  }
  if (j.contains("conditional")) {
    const json& c = j.at("conditional");
    if (!c.is_array()) throw FormatError("\"conditional\" must be a list");
    for (const auto& e : c)
      book.conditional.push_back({formula_of(field(e, "target"), "target"),
                                  formula_of(field(e, "condition"), "condition"),
                                  rational_of(field(e, "value"), "value")});
  }
  return book;
}

UpdateScenario parse_update_scenario(std::string_view text, const std::filesystem::path& base_dir) {
  const json j = parse_json(text);
  const std::string rule = text_of(field(j, "rule"), "rule");
  auto dist = [&](const char* key) -> ProbabilityFunction {
    const json& d = field(j, key);
    if (d.is_string()) return parse_distribution(read_file(base_dir / d.get<std::string>()));
    return distribution_of(d);
  };
  auto formula = [&](const char* key) { return formula_of(field(j, key), key); };
  auto rational = [&](const char* key) { return rational_of(field(j, key), key); };

  UpdateScenario out{BayesSpec{StateDistribution::uniform({"p"}), atom("p")}, {}};
  if (rule == "bayes") {
    out.spec = BayesSpec{dist("p"), formula("B")};
  } else if (rule == "jeffrey") {
    std::vector<std::pair<Formula, Rational>> cells;
    for (const auto& c : field(j, "cells"))
      cells.emplace_back(formula_of(field(c, "formula"), "formula"), rational_of(field(c, "weight"), "weight"));
    out.spec = JeffreySpec{dist("p"), std::move(cells)};
  } else if (rule == "coord") {
    out.spec = CoordSpec{dist("px"), dist("py"), dist("pz"), formula("B")};
  } else if (rule == "coord-bayes") {
    out.spec = CoordBayesSpec{dist("py"), dist("pz"), formula("B1"), formula("B2")};
  } else if (rule == "coord-jeffrey") {
    std::vector<Formula> cells;
    for (const auto& c : field(j, "cells")) cells.push_back(formula_of(c, "cell"));
    out.spec = CoordJeffreySpec{dist("py"), dist("pz_star"), std::move(cells)};
  } else if (rule == "adams") {
    out.spec = AdamsSpec{dist("py"),     dist("pz"),     formula("A1"),     formula("A2"),
                         formula("B1"),  formula("B2"),  rational("new_b1"), rational("new_b2")};
  } else {
    throw FormatError("unknown rule \"" + rule + "\"");
  }
  if (j.contains("domain"))
    for (const auto& f : j.at("domain")) out.domain.push_back(formula_of(f, "domain formula"));
  return out;
}

}  // namespace lablogic

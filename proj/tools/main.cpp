// lablogic: command-line front end. One subcommand per operation group.
//
// Exit status: 0 success / property holds, 1 violation or refutation found,
// 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lablogic/betting.hpp"
#include "lablogic/errors.hpp"
#include "lablogic/formula.hpp"
#include "lablogic/frame.hpp"
#include "lablogic/io.hpp"
#include "lablogic/labsim.hpp"
#include "lablogic/model.hpp"
#include "lablogic/probability.hpp"
#include "lablogic/proof.hpp"
#include "lablogic/truth.hpp"
#include "lablogic/updating.hpp"

namespace {

using namespace lablogic;
using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
};

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

std::vector<Formula> parse_all(const std::vector<std::string>& texts) {
  std::vector<Formula> out;
  for (const auto& t : texts) out.push_back(parse(t));
  return out;
}

// "p=T,q=TF"
Assignment parse_assignment_arg(const std::string& text) {
  Assignment a;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw FormatError("expected atom=value in \"" + item + "\"");
    std::string name = item.substr(0, eq);
    if (!is_valid_atom_name(name)) throw FormatError("invalid atom name \"" + name + "\"");
    a[name] = parse_truth_value(item.substr(eq + 1));
  }
  return a;
}

json values_json(const std::vector<Formula>& fs, const std::function<Rational(const Formula&)>& p) {
  json out = json::object();
  for (const auto& f : fs) out[render(f)] = to_string(p(f));
  return out;
}

// --- subcommands -----------------------------------------------------------

int cmd_parse(const Globals& g, const std::string& text) {
  Formula f = parse(text);
  json j{{"formula", render(f)}, {"atoms", atoms_of(f)}, {"depth", f.depth()}};
  emit(g, j, render(f) + "\n");
  return kOk;
}

int cmd_eval(const Globals& g, const std::string& text, const std::string& assignment, const std::string& model_path,
             const std::string& state) {
  Formula f = parse(text);
  if (!model_path.empty()) {
    Model m = parse_model(read_file(model_path));
    json values = json::object();
    std::ostringstream os;
    for (StateId s = 0; s < m.size(); ++s) {
      if (!state.empty() && m.frame().name(s) != state) continue;
      auto v = std::string(to_token(eval_model(m, s, f)));
      values[m.frame().name(s)] = v;
      os << m.frame().name(s) << ": " << v << '\n';
    }
    if (values.empty()) throw EvalError("unknown state \"" + state + "\"");
    emit(g, json{{"formula", render(f)}, {"values", values}}, os.str());
    return kOk;
  }
  auto v = std::string(to_token(eval_formula(parse_assignment_arg(assignment), f)));
  emit(g, json{{"formula", render(f)}, {"value", v}}, v + "\n");
  return kOk;
}

int cmd_check_frame(const Globals& g, const std::string& path, const std::string& conditions) {
  const ConditionSet cs = ConditionSet::parse(conditions);
  Frame f = parse_frame(read_file(path));
  auto violations = validate_frame(f, cs);
  json list = json::array();
  std::ostringstream os;
  for (const auto& v : violations) {
    list.push_back(describe(v, f));
    os << describe(v, f) << '\n';
  }
  if (violations.empty()) os << "all conditions satisfied (" << cs.describe() << ")\n";
  emit(g, json{{"conditions", cs.describe()}, {"violations", list}}, os.str());
  return violations.empty() ? kOk : kViolation;
}

int cmd_check_model(const Globals& g, const std::string& path, int depth) {
  Model m = parse_model(read_file(path));
  auto frame_violations = validate_frame(m.frame(), ConditionSet{});
  auto persistence = check_persistence(m, depth);
  json list = json::array();
  std::ostringstream os;
  for (const auto& v : frame_violations) {
    list.push_back(describe(v, m.frame()));
    os << describe(v, m.frame()) << '\n';
  }
  for (const auto& v : persistence) {
    std::string pol = v.polarity == Polarity::T ? "T" : "F";
    std::string line = "persistence fails: " + pol + " in v(" + render(v.formula) + ") at " +
                       m.frame().name(v.lower) + " but not at " + m.frame().name(v.upper);
    list.push_back(line);
    os << line << '\n';
  }
  const bool ok = frame_violations.empty() && persistence.empty();
  if (ok) os << "model is well formed and persistent up to depth " << depth << '\n';
  emit(g, json{{"depth", depth}, {"violations", list}}, os.str());
  return ok ? kOk : kViolation;
}

int cmd_entails(const Globals& g, const std::vector<std::string>& premises, const std::string& conclusion,
                const std::string& model_path, bool at_L) {
  auto X = parse_all(premises);
  Formula A = parse(conclusion);
  if (!model_path.empty()) {
    Model m = parse_model(read_file(model_path));
    bool holds = consequence_in_model(m, X, A, at_L);
    emit(g, json{{"holds", holds}}, holds ? "holds in the model\n" : "fails in the model\n");
    return holds ? kOk : kViolation;
  }
  if (X.empty()) throw PreconditionError("four-valued entailment needs at least one premise");
  auto cx = fde_counterexample(conj_all(X), A);
  json j{{"entails", !cx}};
  if (cx) j["counterexample"] = render(*cx);
  emit(g, j, cx ? "does not entail; counterexample: " + render(*cx) + "\n" : std::string("entails\n"));
  return cx ? kViolation : kOk;
}

LogicConfig logic_config(const std::string& axioms, const std::string& conditions) {
  if (!conditions.empty()) return LogicConfig::for_conditions(ConditionSet::parse(conditions));
  if (axioms == "all") return LogicConfig::all();
  LogicConfig cfg;
  std::stringstream in(axioms);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    if (item[0] == 'A' || item[0] == 'a') item.erase(0, 1);
    try {
      cfg.enable(std::stoi(item));
    } catch (const std::logic_error&) {
      throw FormatError("unknown optional axiom \"" + item + "\"");
    }
  }
  return cfg;
}

int cmd_prove_check(const Globals& g, const std::string& path, const std::string& axioms,
                    const std::string& conditions) {
  Proof proof = parse_proof(read_file(path));
  auto result = check_proof(proof, logic_config(axioms, conditions));
  json j{{"accepted", result.accepted}, {"lines", proof.size()}};
  if (!result.accepted) {
    j["line"] = result.line;
    j["reason"] = result.reason;
  }
  emit(g, j,
       result.accepted ? "proof accepted (" + std::to_string(proof.size()) + " lines)\n"
                       : "proof rejected at line " + std::to_string(result.line) + ": " + result.reason + "\n");
  return result.accepted ? kOk : kViolation;
}

int cmd_countermodel(const Globals& g, const std::vector<std::string>& premises, const std::string& conclusion,
                     std::size_t max_states, const std::string& conditions, std::optional<std::uint64_t> node_limit) {
  SearchBounds bounds;
  bounds.max_states = max_states;
  bounds.conditions = ConditionSet::parse(conditions);
  bounds.node_limit = node_limit;
  auto m = find_countermodel(parse_all(premises), parse(conclusion), bounds);
  if (!m) {
    emit(g, json{{"found", false}}, "no countermodel with at most " + std::to_string(max_states) + " states\n");
    return kOk;
  }
  const std::string text = write_model(*m);
  emit(g, json{{"found", true}, {"model", json::parse(text)}}, text);
  return kViolation;
}

int cmd_prob_validate(const Globals& g, const std::string& path, bool nontrivial) {
  QuoteBook table = parse_quotes(read_file(path));
  ValidateOptions opts;
  opts.require_nontrivial = nontrivial;
  opts.conditionals = table.conditional;
  auto violations = validate_probability(FormulaValues(table.quotients.begin(), table.quotients.end()), opts);
  json list = json::array();
  std::ostringstream os;
  for (const auto& v : violations) {
    list.push_back(describe(v));
    os << describe(v) << '\n';
  }
  if (violations.empty()) os << "satisfies the probability axioms on its domain\n";
  emit(g, json{{"violations", list}}, os.str());
  return violations.empty() ? kOk : kViolation;
}

int cmd_ttp(const Globals& g, const std::string& path, const std::string& formula,
            const std::vector<std::string>& cells) {
  ProbabilityFunction p = parse_distribution(read_file(path));
  auto B = parse_all(cells);
  if (!behaves_as_partition(p, B)) {
    emit(g, json{{"partition", false}}, "the cells do not behave as a partition\n");
    return kViolation;
  }
  auto [lhs, rhs] = total_probability_check(p, parse(formula), B);
  const bool equal = lhs == rhs;
  emit(g, json{{"partition", true}, {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)}, {"equal", equal}},
       "p(A) = " + to_string(lhs) + "\nsum of p(A|B_i) p(B_i) = " + to_string(rhs) + "\n");
  return equal ? kOk : kViolation;
}

json bets_json(const std::vector<Bet>& bets) {
  json out = json::array();
  for (const auto& b : bets) {
    json e{{"kind", std::string(to_string(b.kind))}, {"target", render(b.target)}};
    if (b.condition) e["condition"] = render(*b.condition);
    e["quotient"] = to_string(b.quotient);
    e["stake"] = to_string(b.stake);
    out.push_back(e);
  }
  return out;
}

std::string bets_text(const std::vector<Bet>& bets) {
  std::ostringstream os;
  for (const auto& b : bets) {
    os << "  " << to_string(b.kind) << " bet on " << render(b.target);
    if (b.condition) os << " given " << render(*b.condition);
    os << " at " << to_string(b.quotient) << ", stake " << to_string(b.stake) << '\n';
  }
  return os.str();
}

int cmd_dutch_book(const Globals& g, const std::string& path, const std::string& scale) {
  const std::string text = read_file(path);
  bool is_bet_list = false;
  try {
    is_bet_list = json::parse(text).is_array();
  } catch (const json::exception&) {
    throw FormatError("malformed JSON in " + path);
  }
  if (is_bet_list) {
    auto bets = parse_bets(text);
    auto r = is_dutch_book(bets);
    emit(g, json{{"dutch_book", r.dutch_book}, {"max_gain", to_string(r.max_gain)}, {"min_gain", to_string(r.min_gain)}},
         std::string(r.dutch_book ? "Dutch book" : "no Dutch book") + ": net gain ranges over [" +
             to_string(r.min_gain) + ", " + to_string(r.max_gain) + "]\n");
    return r.dutch_book ? kViolation : kOk;
  }
  auto violation = find_quote_violation(parse_quotes(text));
  if (!violation) {
    emit(g, json{{"violation", nullptr}}, "no axiom violation among the quotes\n");
    return kOk;
  }
  auto bets = construct_violation_stakes(*violation, parse_rational(scale));
  auto r = is_dutch_book(bets);
  emit(g,
       json{{"axiom", axiom_of(*violation)},
            {"violation", describe(*violation)},
            {"bets", bets_json(bets)},
            {"max_gain", to_string(r.max_gain)}},
       describe(*violation) + "\nstakes:\n" + bets_text(bets) + "guaranteed net gain at most " +
           to_string(r.max_gain) + "\n");
  return kViolation;
}

std::vector<Formula> default_update_domain(const UpdateSpec& spec) {
  std::set<std::string> names;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        auto take = [&](const Formula& f) {
          auto a = atoms_of(f);
          names.insert(a.begin(), a.end());
        };
        if constexpr (std::is_same_v<T, BayesSpec> || std::is_same_v<T, CoordSpec>) take(s.B);
        if constexpr (std::is_same_v<T, JeffreySpec>)
          for (const auto& [f, w] : s.cells) take(f);
        if constexpr (std::is_same_v<T, CoordBayesSpec>) {
          take(s.B1);
          take(s.B2);
        }
        if constexpr (std::is_same_v<T, CoordJeffreySpec>)
          for (const auto& f : s.cells) take(f);
        if constexpr (std::is_same_v<T, AdamsSpec>) {
          take(s.A1);
          take(s.A2);
          take(s.B1);
          take(s.B2);
        }
      },
      spec);
  std::vector<Formula> out;
  for (const auto& n : names) {
    out.push_back(atom(n));
    out.push_back(neg(atom(n)));
  }
  return out;
}

int cmd_update(const Globals& g, const std::string& path, bool check) {
  auto scenario = parse_update_scenario(read_file(path), std::filesystem::path(path).parent_path());
  auto domain = scenario.domain.empty() ? default_update_domain(scenario.spec) : scenario.domain;
  ProbabilityFunction out = apply_update(scenario.spec);
  json j{{"rule", rule_name(scenario.spec)}, {"values", values_json(domain, [&](const Formula& f) { return out(f); })}};
  std::ostringstream os;
  os << "rule " << rule_name(scenario.spec) << '\n';
  for (const auto& f : domain) os << "  p*(" << render(f) << ") = " << to_string(out(f)) << '\n';
  int status = kOk;
  if (check) {
    auto report = check_characterization(scenario.spec, out, domain);
    j["characterization"] = {{"holds", report.holds}, {"failed", report.failed}};
    os << (report.holds ? "characterization holds" : "characterization fails");
    for (const auto& name : report.failed) os << (name == report.failed.front() ? ": " : ", ") << name;
    os << '\n';
    if (!report.holds) status = kViolation;
  }
  emit(g, j, os.str());
  return status;
}

struct SimulateArgs {
  std::string distribution;
  std::string trials_file;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::vector<std::string> formulas;
  bool emit_trials = false;
  std::string model;
  std::string state;
  std::string conditional;
  std::string mode = "as-written";
};

int cmd_simulate(const Globals& g, const SimulateArgs& a) {
  if (!a.model.empty()) {
    Model m = parse_model(read_file(a.model));
    Formula f = parse(a.conditional);
    const NegatedMode mode = parse_negated_mode(a.mode);
    json j{{"state", a.state}, {"conditional", render(f)}, {"mode", std::string(to_string(mode))}};
    std::ostringstream os;
    const StateId x = m.frame().index(a.state);
    try {
      auto r = conditional_rfreq(m, x, f);
      j["rfreq"] = to_string(r);
      os << "rfreq(" << render(f) << ") at " << a.state << " = " << to_string(r) << '\n';
    } catch (const PreconditionError& e) {
      j["rfreq"] = nullptr;
      os << "rfreq(" << render(f) << ") undefined: " << e.what() << '\n';
    }
    try {
      auto r = negated_conditional_rfreq(m, x, f, mode);
      j["negated_rfreq"] = to_string(r);
      os << "rfreq(~(" << render(f) << ")) at " << a.state << " = " << to_string(r) << " [" << to_string(mode)
         << "]\n";
    } catch (const PreconditionError& e) {
      j["negated_rfreq"] = nullptr;
      os << "rfreq(~(" << render(f) << ")) undefined: " << e.what() << '\n';
    }
    emit(g, j, os.str());
    return kOk;
  }
  TrialStream ts = !a.trials_file.empty()
                       ? parse_trials(read_file(a.trials_file))
                       : sample_trials(parse_distribution(read_file(a.distribution)), a.trials, a.seed);
  if (a.emit_trials) {
    std::cout << render(ts);
    return kOk;
  }
  std::vector<Formula> formulas = parse_all(a.formulas);
  if (formulas.empty())
    for (const auto& n : ts.atoms) formulas.push_back(atom(n));
  auto table = run_trials(ts, formulas);
  json rows = json::array();
  std::ostringstream os;
  os << "trials " << table.trials() << '\n';
  for (const auto& f : formulas) {
    json row{{"formula", render(f)}, {"freq", table.freq(f)}, {"neg_freq", table.neg_freq(f)}};
    if (table.trials() > 0) row["rfreq"] = to_string(table.rfreq(f));
    rows.push_back(row);
    os << "  " << render(f) << ": freq " << table.freq(f) << ", freq of negation " << table.neg_freq(f);
    if (table.trials() > 0) os << ", rfreq " << to_string(table.rfreq(f));
    os << '\n';
  }
  emit(g, json{{"trials", table.trials()}, {"frequencies", rows}}, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-valued laboratory logic: models, proofs, probabilities and updates"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit machine-readable JSON");
  std::function<int()> run;

  std::string formula_text, assignment, model_path, state;
  auto* parse_cmd = app.add_subcommand("parse", "Parse and pretty-print a formula");
  parse_cmd->add_option("formula", formula_text)->required();
  parse_cmd->callback([&] { run = [&] { return cmd_parse(g, formula_text); }; });

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula under an assignment or in a model");
  eval_cmd->add_option("formula", formula_text)->required();
  auto* assign_opt = eval_cmd->add_option("--assignment", assignment, "atom=value list, e.g. p=T,q=TF");
  auto* model_opt = eval_cmd->add_option("--model", model_path, "Model file");
  eval_cmd->add_option("--state", state, "Only this state");
  assign_opt->excludes(model_opt);
  eval_cmd->callback([&] { run = [&] { return cmd_eval(g, formula_text, assignment, model_path, state); }; });

  std::string file, conditions = "all";
  auto* frame_cmd = app.add_subcommand("check-frame", "Check frame conditions");
  frame_cmd->add_option("file", file)->required();
  frame_cmd->add_option("--conditions", conditions, "Comma list of conditions (vi..x, a..e, all)");
  frame_cmd->callback([&] { run = [&] { return cmd_check_frame(g, file, conditions); }; });

  int depth = 3;
  auto* model_cmd = app.add_subcommand("check-model", "Check frame conditions i-v and persistence");
  model_cmd->add_option("file", file)->required();
  model_cmd->add_option("--depth", depth, "Formula depth for persistence")->check(CLI::Range(0, 6));
  model_cmd->callback([&] { run = [&] { return cmd_check_model(g, file, depth); }; });

  std::vector<std::string> premises;
  std::string conclusion;
  bool at_L = false;
  auto* ent_cmd = app.add_subcommand("entails", "Four-valued entailment, or consequence in a model");
  ent_cmd->add_option("--premise", premises, "Premise (repeatable)");
  ent_cmd->add_option("--conclusion", conclusion)->required();
  ent_cmd->add_option("--model", model_path, "Check consequence in this model");
  ent_cmd->add_flag("--at-L", at_L, "Restrict to well-behaved states");
  ent_cmd->callback([&] { run = [&] { return cmd_entails(g, premises, conclusion, model_path, at_L); }; });

  std::string axioms = "all", proof_conditions;
  auto* prove_cmd = app.add_subcommand("prove-check", "Check a Hilbert-style proof");
  prove_cmd->add_option("file", file)->required();
  prove_cmd->add_option("--axioms", axioms, "Optional axioms to allow: all, or a list like 12,14");
  prove_cmd->add_option("--conditions", proof_conditions, "Allow the optional axioms sound for these conditions");
  prove_cmd->callback([&] { run = [&] { return cmd_prove_check(g, file, axioms, proof_conditions); }; });

  std::size_t max_states = 3;
  std::optional<std::uint64_t> node_limit;
  auto* cm_cmd = app.add_subcommand("countermodel", "Search for a finite countermodel");
  cm_cmd->add_option("--premise", premises, "Premise (repeatable)");
  cm_cmd->add_option("--conclusion", conclusion)->required();
  cm_cmd->add_option("--max-states", max_states)->check(CLI::Range(std::size_t{1}, kMaxSearchStates));
  cm_cmd->add_option("--conditions", conditions, "Frame conditions beyond i-v");
  cm_cmd->add_option("--node-limit", node_limit, "Abort after this many search nodes");
  cm_cmd->callback(
      [&] { run = [&] { return cmd_countermodel(g, premises, conclusion, max_states, conditions, node_limit); }; });

  bool nontrivial = false;
  auto* pv_cmd = app.add_subcommand("prob-validate", "Check a probability table against the axioms");
  pv_cmd->add_option("file", file)->required();
  pv_cmd->add_flag("--nontrivial", nontrivial, "Also require some positive value");
  pv_cmd->callback([&] { run = [&] { return cmd_prob_validate(g, file, nontrivial); }; });

  std::vector<std::string> cells;
  auto* ttp_cmd = app.add_subcommand("ttp", "Total probability over cells behaving as a partition");
  ttp_cmd->add_option("file", file, "Distribution file")->required();
  ttp_cmd->add_option("--formula", formula_text)->required();
  ttp_cmd->add_option("--cell", cells, "Cell (repeatable)")->required();
  ttp_cmd->callback([&] { run = [&] { return cmd_ttp(g, file, formula_text, cells); }; });

  std::string scale = "1";
  auto* db_cmd = app.add_subcommand("dutch-book", "Dutch-book analysis of quotes or of a bet family");
  db_cmd->add_option("file", file, "Quotes file or bet list")->required();
  db_cmd->add_option("--stake", scale, "Stake scale for recipes");
  db_cmd->callback([&] { run = [&] { return cmd_dutch_book(g, file, scale); }; });

  bool check = false;
  auto* up_cmd = app.add_subcommand("update", "Apply an updating rule from a scenario file");
  up_cmd->add_option("file", file)->required();
  up_cmd->add_flag("--check", check, "Also check the rule's characterization on the output");
  up_cmd->callback([&] { run = [&] { return cmd_update(g, file, check); }; });

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Trial frequencies, or frequencies of a conditional in a model");
  auto* dist_opt = sim_cmd->add_option("--distribution", sim.distribution, "Sample trials from this distribution");
  auto* tf_opt = sim_cmd->add_option("--trials-file", sim.trials_file, "Read trials from this file");
  sim_cmd->add_option("--trials", sim.trials, "Number of sampled trials");
  sim_cmd->add_option("--seed", sim.seed, "Sampling seed");
  sim_cmd->add_option("--formula", sim.formulas, "Formula to count (repeatable)");
  sim_cmd->add_flag("--emit-trials", sim.emit_trials, "Print the trial stream instead of frequencies");
  auto* sm_opt = sim_cmd->add_option("--model", sim.model, "Model for conditional frequencies");
  sim_cmd->add_option("--state", sim.state, "State whose pairs are counted");
  sim_cmd->add_option("--conditional", sim.conditional, "A conditional A -> B");
  sim_cmd->add_option("--mode", sim.mode, "Negated-conditional reading: as-written or conjunctive");
  dist_opt->excludes(tf_opt);
  sm_opt->excludes(dist_opt)->excludes(tf_opt);
  sim_cmd->callback([&] { run = [&] { return cmd_simulate(g, sim); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (sim_cmd->parsed()) {
    const bool from_model = !sim.model.empty();
    if (from_model && (sim.state.empty() || sim.conditional.empty())) {
      std::cerr << "simulate --model needs --state and --conditional\n";
      return kUsage;
    }
    if (!from_model && sim.distribution.empty() && sim.trials_file.empty()) {
      std::cerr << "simulate needs --distribution, --trials-file or --model\n";
      return kUsage;
    }
  }
  if (eval_cmd->parsed() && model_path.empty() && assignment.empty() && !parse(formula_text).is_atom()) {
    // An empty assignment is fine only for formulas without atoms, which do
    // not exist; report the missing input plainly.
    std::cerr << "eval needs --assignment or --model\n";
    return kUsage;
  }
  try {
    return run();
  } catch (const lablogic::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}

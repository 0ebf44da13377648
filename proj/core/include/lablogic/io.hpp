#pragma once

// File formats. Every reader throws FormatError (or ParseError for a bad
// formula) with a message naming the offending field.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lablogic/betting.hpp"
#include "lablogic/model.hpp"
#include "lablogic/probability.hpp"
#include "lablogic/updating.hpp"

namespace lablogic {

std::string read_file(const std::filesystem::path& path);

// {"states": ["u", "x"] | n, "L": [...], "R1": [[a, b, c], ...], "R2": [...],
//  "valuation": {"u": {"A": "N", ...}, ...}}
// States in L and triples may be given by name or by index. The valuation
// may be omitted for a bare frame.
Model parse_model(std::string_view json);
Frame parse_frame(std::string_view json);
std::string write_model(const Model& m);

// {"atoms": [...], "masses": [{"assignment": {"p": "T"}, "mass": "1/2"}, ...]}
StateDistribution parse_distribution(std::string_view json);
std::string write_distribution(const std::vector<std::string>& atoms, const std::vector<WeightedAssignment>& masses);

// [{"kind": "plain", "target": "p", "condition": "q", "quotient": "1/2",
//   "stake": "-1"}, ...]
std::vector<Bet> parse_bets(std::string_view json);

// {"quotients": {"p": "1/2", "p | q": "3/5"},
//  "conditional": [{"target": "p", "condition": "q", "value": "1/3"}]}
// A probability table uses the same shape, with "values" accepted in place
// of "quotients".
QuoteBook parse_quotes(std::string_view json);

// {"rule": "adams", "py": "y.json", "pz": {...inline distribution...},
//  "A1": "a", ..., "new_b1": "2/3", "domain": ["c", "a & c"]}
// Distribution references are file paths relative to `base_dir`, or
// inline distribution objects.
struct UpdateScenario {
  UpdateSpec spec;
  std::vector<Formula> domain;
};
UpdateScenario parse_update_scenario(std::string_view json, const std::filesystem::path& base_dir);

}  // namespace lablogic

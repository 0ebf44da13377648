#pragma once

// Seeded generators for property tests and benchmarks.

#include <random>
#include <string>
#include <vector>

#include "lablogic/formula.hpp"
#include "lablogic/frame.hpp"
#include "lablogic/model.hpp"

namespace lablogic {

using Rng = std::mt19937_64;

// A random frame on `states` states satisfying i..v plus `conditions`.
// Starts from a sparse random L and R1/R2, then adds triples and
// L-members until no checked condition fails.
Frame random_frame(Rng& rng, std::size_t states, const ConditionSet& conditions);

// A random frame with a persistent valuation over `atoms`: values are drawn
// per state and then closed upward along <=.
Model random_model(Rng& rng, std::size_t states, const std::vector<std::string>& atoms,
                   const ConditionSet& conditions);

// A random formula of depth at most `max_depth`.
Formula random_formula(Rng& rng, const std::vector<std::string>& atoms, int max_depth, bool allow_implication = true);

}  // namespace lablogic

#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "lablogic/generate.hpp"
#include "lablogic/probability.hpp"

namespace testing_support {

inline std::filesystem::path data_dir() { return LABLOGIC_TEST_DATA; }

inline std::string data(const std::string& name) { return (data_dir() / name).string(); }

// A random distribution over `atoms` with up to `support` mass points and
// small integer weights. Atoms in `classical` only take T or F.
inline lablogic::StateDistribution random_distribution(lablogic::Rng& rng, const std::vector<std::string>& atoms,
                                                       std::size_t support,
                                                       const std::set<std::string>& classical = {}) {
  std::vector<lablogic::WeightedAssignment> weights;
  std::set<std::string> used;
  std::uniform_int_distribution<int> value(0, 3);
  std::uniform_int_distribution<int> weight(1, 6);
  for (std::size_t k = 0; k < support; ++k) {
    lablogic::Assignment a;
    for (const auto& name : atoms) {
      int code = value(rng);
      if (classical.count(name)) code = 1 + code % 2;
      a[name] = lablogic::TruthValue::from_code(static_cast<unsigned>(code));
    }
    if (!used.insert(lablogic::render(a)).second) continue;
    weights.emplace_back(a, weight(rng));
  }
  return lablogic::StateDistribution::from_weights(atoms, std::move(weights));
}

inline mpq_class random_rational(lablogic::Rng& rng, int lo, int hi, int den) {
  std::uniform_int_distribution<int> num(lo, hi);
  mpq_class q(num(rng), den);
  q.canonicalize();
  return q;
}

}  // namespace testing_support

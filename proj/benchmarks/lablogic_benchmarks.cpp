#include <benchmark/benchmark.h>

#include "lablogic/betting.hpp"
#include "lablogic/generate.hpp"
#include "lablogic/labsim.hpp"
#include "lablogic/model.hpp"
#include "lablogic/probability.hpp"
#include "lablogic/proof.hpp"
#include "lablogic/truth.hpp"
#include "lablogic/updating.hpp"

using namespace lablogic;

namespace {

const std::vector<std::string> kAtoms{"p", "q", "r"};

void BM_Parse(benchmark::State& state) {
  const std::string text = "((p -> ~q) & (q | r -> p)) -> ~(r & ~p) | (q -> q & r)";
  for (auto _ : state) benchmark::DoNotOptimize(parse(text));
}
BENCHMARK(BM_Parse);

void BM_FdeEntails(benchmark::State& state) {
  Rng rng(1);
  std::vector<std::string> atoms;
  for (int i = 0; i < state.range(0); ++i) atoms.push_back("a" + std::to_string(i));
  const Formula a = random_formula(rng, atoms, 4, false);
  const Formula b = random_formula(rng, atoms, 4, false);
  for (auto _ : state) benchmark::DoNotOptimize(fde_entails(a, b));
}
BENCHMARK(BM_FdeEntails)->DenseRange(2, 6, 2);

void BM_EvalModel(benchmark::State& state) {
  Rng rng(2);
  const Model m = random_model(rng, static_cast<std::size_t>(state.range(0)), kAtoms, ConditionSet::all_numbered());
  const Formula f = parse("((p -> q) & (q -> r)) -> (p -> r)");
  for (auto _ : state) benchmark::DoNotOptimize(eval_profile(m, f));
}
BENCHMARK(BM_EvalModel)->DenseRange(2, 5);

void BM_Persistence(benchmark::State& state) {
  Rng rng(3);
  const Model m = random_model(rng, 4, {"p", "q"}, ConditionSet{});
  for (auto _ : state) benchmark::DoNotOptimize(check_persistence(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Persistence)->DenseRange(1, 3);

void BM_Countermodel(benchmark::State& state) {
  SearchBounds bounds;
  bounds.max_states = 3;
  const Formula premise = parse("A -> ~B");
  const Formula conclusion = parse("B -> ~A");
  for (auto _ : state) benchmark::DoNotOptimize(find_countermodel({premise}, conclusion, bounds));
}
BENCHMARK(BM_Countermodel)->Unit(benchmark::kMillisecond);

void BM_CheckProof(benchmark::State& state) {
  const Proof p = parse_proof(
      "1 A & B -> B ; AXIOM A3\n"
      "2 A & B -> A ; AXIOM A3\n"
      "3 (A & B -> B) & (A & B -> A) ; RULE R2 FROM 1,2\n"
      "4 (A & B -> B) & (A & B -> A) -> (A & B -> B & A) ; AXIOM A5\n"
      "5 A & B -> B & A ; RULE R1 FROM 3,4\n");
  for (auto _ : state) benchmark::DoNotOptimize(check_proof(p));
}
BENCHMARK(BM_CheckProof);

void BM_ValidatePrefixes(benchmark::State& state) {
  const auto d = StateDistribution::uniform({"p", "q"});
  const TrialStream ts = sample_trials(d, static_cast<std::size_t>(state.range(0)), 7);
  const std::vector<Formula> domain{parse("p"), parse("q"), parse("p & q"), parse("p | q"), parse("~p"), parse("p & ~p")};
  const ProbabilityValidator validator(domain);
  for (auto _ : state) {
    FrequencyCounter counter(domain);
    bool ok = true;
    for (const auto& t : ts.trials) {
      counter.add(t);
      ok = ok && validator.coherent(counter.rfreq());
    }
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_ValidatePrefixes)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_DutchBookProfile(benchmark::State& state) {
  std::vector<Bet> bets;
  for (int i = 0; i < state.range(0); ++i)
    bets.push_back(Bet::conditional(parse("p & q"), parse("q | r"), Rational(1, 3), i + 1));
  for (auto _ : state) benchmark::DoNotOptimize(is_dutch_book(bets));
}
BENCHMARK(BM_DutchBookProfile)->RangeMultiplier(2)->Range(1, 8);

void BM_BayesCharacterization(benchmark::State& state) {
  const ProbabilityFunction p = StateDistribution::uniform({"a", "b"});
  const BayesSpec spec{p, parse("a")};
  const ProbabilityFunction out = apply_update(spec);
  for (auto _ : state) benchmark::DoNotOptimize(check_characterization(spec, out, {parse("b"), parse("a | b")}));
}
BENCHMARK(BM_BayesCharacterization);

}  // namespace
BENCHMARK_MAIN();

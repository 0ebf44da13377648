#include <gtest/gtest.h>

#include "helpers.hpp"
#include "lablogic/errors.hpp"
#include "lablogic/generate.hpp"
#include "lablogic/io.hpp"
#include "lablogic/model.hpp"
#include "oracle.hpp"

using namespace lablogic;

namespace {

Model contraposition() { return parse_model(read_file(testing_support::data("contraposition.model.json"))); }

}  // namespace

TEST(Models, ContrapositionCountermodelValues) {
  Model m = contraposition();
  EXPECT_TRUE(eval_model(m, "u", parse("A -> ~B")).t);
  EXPECT_FALSE(eval_model(m, "u", parse("B -> ~A")).t);
  // A is a gap, B a glut: ~B is T and F everywhere, ~A neither.
  EXPECT_EQ(eval_model(m, "y", parse("~B")), TruthValue::both());
  EXPECT_EQ(eval_model(m, "y", parse("~A")), TruthValue::neither());
  EXPECT_FALSE(consequence_in_model(m, {}, parse("(A -> ~B) -> (B -> ~A)"), true));
}

TEST(Models, EvaluationMatchesOracleOnRandomModels) {
  Rng rng(21);
  for (int k = 0; k < 60; ++k) {
    Model m = random_model(rng, 1 + k % 4, {"p", "q"}, k % 2 ? ConditionSet::all_numbered() : ConditionSet{});
    for (int i = 0; i < 25; ++i) {
      Formula f = random_formula(rng, {"p", "q"}, 3);
      for (StateId s = 0; s < m.size(); ++s) {
        auto v = eval_model(m, s, f);
        EXPECT_EQ(oracle::make(v.t, v.f), oracle::eval(m, s, f)) << render(f);
      }
    }
  }
}

TEST(Models, RandomModelsArePersistent) {
  Rng rng(22);
  for (int k = 0; k < 40; ++k) {
    Model m = random_model(rng, 1 + k % 4, {"p", "q"}, ConditionSet{});
    EXPECT_TRUE(check_persistence(m, 2).empty());
  }
}

TEST(Models, PersistenceViolationIsReported) {
  // x <= y via u, but p is T at x and N at y.
  Frame f(std::vector<std::string>{"u", "x", "y"}, {"u"},
          {{"u", "u", "u"}, {"u", "x", "x"}, {"u", "y", "y"}, {"u", "x", "y"}}, {});
  Model m(f, {{{"p", TruthValue::true_only()}}, {{"p", TruthValue::true_only()}}, {{"p", TruthValue::neither()}}});
  auto v = check_persistence(m, 0);
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(m.frame().name(v[0].lower), "x");
  EXPECT_EQ(m.frame().name(v[0].upper), "y");
  EXPECT_EQ(v[0].formula, atom("p"));
  EXPECT_EQ(v[0].polarity, Polarity::T);
}

TEST(Models, WeakDeductionOnRandomModels) {
  Rng rng(23);
  for (int k = 0; k < 30; ++k) {
    Model m = random_model(rng, 1 + k % 3, {"p", "q"}, ConditionSet{});
    for (int i = 0; i < 20; ++i) {
      Formula a = random_formula(rng, {"p", "q"}, 2);
      Formula b = random_formula(rng, {"p", "q"}, 2);
      EXPECT_EQ(consequence_in_model(m, {a}, b, false), consequence_in_model(m, {}, imp(a, b), true));
    }
  }
}

TEST(Models, ConsequenceNeedsPremisesOffL) {
  EXPECT_THROW(consequence_in_model(contraposition(), {}, atom("A"), false), PreconditionError);
}

TEST(Models, ModelConstructionChecksAtoms) {
  Frame f(1, {0}, {{0, 0, 0}}, {});
  EXPECT_THROW(eval_model(Model(f, {{{"p", TruthValue::true_only()}}}), 0, atom("q")), EvalError);
  Frame g(2, {0}, {{0, 0, 0}, {0, 1, 1}}, {});
  EXPECT_THROW(Model(g, {{{"p", TruthValue::true_only()}}, {{"q", TruthValue::true_only()}}}), FormatError);
}

TEST(Models, CountermodelSearchFindsContraposition) {
  SearchBounds bounds;
  bounds.max_states = 3;
  auto m = find_countermodel({parse("A -> ~B")}, parse("B -> ~A"), bounds);
  ASSERT_TRUE(m);
  EXPECT_TRUE(validate_frame(m->frame(), ConditionSet::all_numbered()).empty());
  EXPECT_TRUE(check_persistence(*m, 2).empty());
  EXPECT_TRUE(oracle::valid_at_L(*m, parse("A -> ~B")));
  EXPECT_FALSE(oracle::valid_at_L(*m, parse("B -> ~A")));
}

TEST(Models, CountermodelSearchHonoursBounds) {
  SearchBounds small;
  small.max_states = 2;
  EXPECT_FALSE(find_countermodel({parse("A & B")}, parse("B"), small));
  small.max_states = 0;
  EXPECT_THROW(find_countermodel({}, atom("A"), small), SearchBoundsError);
  small.max_states = kMaxSearchStates + 1;
  EXPECT_THROW(find_countermodel({}, atom("A"), small), SearchBoundsError);
  SearchBounds tight;
  tight.max_states = 2;
  tight.node_limit = 3;
  EXPECT_THROW(find_countermodel({parse("A -> A")}, parse("A & ~A -> B"), tight), SearchBoundsError);
}

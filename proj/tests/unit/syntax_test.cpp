#include <gtest/gtest.h>

#include "lablogic/errors.hpp"
#include "lablogic/formula.hpp"
#include "lablogic/generate.hpp"

using namespace lablogic;

TEST(Syntax, PrecedenceAndAssociativity) {
  EXPECT_EQ(parse("p & q | r"), disj(conj(atom("p"), atom("q")), atom("r")));
  EXPECT_EQ(parse("~p & q"), conj(neg(atom("p")), atom("q")));
  // -> is right associative and binds weakest.
  EXPECT_EQ(parse("p -> q -> r"), imp(atom("p"), imp(atom("q"), atom("r"))));
  EXPECT_EQ(parse("p & q -> q | p"), imp(conj(atom("p"), atom("q")), disj(atom("q"), atom("p"))));
  // & and | are left associative.
  EXPECT_EQ(parse("p & q & r"), conj(conj(atom("p"), atom("q")), atom("r")));
}

TEST(Syntax, UnicodeConnectives) {
  EXPECT_EQ(parse("¬p ∧ q → r ∨ s"), parse("~p & q -> r | s"));
}

TEST(Syntax, RenderUsesMinimalParentheses) {
  EXPECT_EQ(render(parse("((p & q))")), "p & q");
  EXPECT_EQ(render(parse("(p -> q) -> r")), "(p -> q) -> r");
  EXPECT_EQ(render(parse("p -> (q -> r)")), "p -> q -> r");
  EXPECT_EQ(render(parse("~(p | q)")), "~(p | q)");
  EXPECT_EQ(render(parse("p & (q & r)")), "p & (q & r)");
  EXPECT_EQ(render(parse("~~p")), "~~p");
}

TEST(Syntax, RoundTripRandomFormulas) {
  Rng rng(17);
  for (int i = 0; i < 500; ++i) {
    Formula f = random_formula(rng, {"p", "q", "r"}, 4);
    EXPECT_EQ(parse(render(f)), f) << render(f);
  }
}

TEST(Syntax, ErrorsCarryOffset) {
  try {
    parse("p & (q | )");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("offset 9"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("p q"), ParseError);
  EXPECT_THROW(parse("(p"), ParseError);
  EXPECT_THROW(parse("p ->"), ParseError);
}

TEST(Syntax, AtomsDepthAndConditionals) {
  Formula f = parse("(p -> ~q) & r");
  EXPECT_EQ(atoms_of(f), (std::set<std::string>{"p", "q", "r"}));
  EXPECT_EQ(f.depth(), 3);
  EXPECT_TRUE(contains_implication(f));
  EXPECT_FALSE(contains_implication(parse("p & ~q")));
  EXPECT_EQ(atom("p").depth(), 0);
}

TEST(Syntax, StructuralEqualityAndOrdering) {
  EXPECT_EQ(parse("p & q"), conj(atom("p"), atom("q")));
  EXPECT_NE(parse("p & q"), parse("q & p"));
  std::set<Formula> s{parse("p"), parse("p"), parse("~p")};
  EXPECT_EQ(s.size(), 2U);
  EXPECT_EQ(FormulaHash{}(parse("p -> q")), FormulaHash{}(imp(atom("p"), atom("q"))));
}

TEST(Syntax, ConjAllAndDisjAll) {
  EXPECT_EQ(conj_all({atom("a"), atom("b"), atom("c")}), parse("a & b & c"));
  EXPECT_EQ(disj_all({atom("a")}), atom("a"));
  EXPECT_THROW(conj_all({}), Error);
}

TEST(Syntax, AtomNames) {
  EXPECT_TRUE(is_valid_atom_name("p1"));
  EXPECT_TRUE(is_valid_atom_name("lab_x"));
  EXPECT_FALSE(is_valid_atom_name(""));
  EXPECT_FALSE(is_valid_atom_name("1p"));
}

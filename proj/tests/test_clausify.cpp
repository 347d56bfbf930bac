#include <gtest/gtest.h>

#include "davis/clausify.hpp"
#include "davis/error.hpp"
#include "davis/formats.hpp"

using namespace davis;

namespace {

std::string clauses(const std::string& text, bool negate = false) {
  return clausify(parse_formula(text), negate).to_string();
}

}  // namespace

TEST(Clausify, Examples) {
  EXPECT_EQ(clauses("(forall x (imp (P x) (Q x)))"), "{{~P(x), Q(x)}}");
  EXPECT_EQ(clauses("(exists x (P x))"), "{{P(sk0)}}");
  EXPECT_EQ(clauses("(forall x (exists y (R x y)))"), "{{R(x,sk0(x))}}");
}

TEST(Clausify, NegationFlipsQuantifiers) {
  // not forall x P(x)  ==  exists x not P(x)
  EXPECT_EQ(clauses("(forall x (P x))", true), "{{~P(sk0)}}");
  // not exists x P(x)  ==  forall x not P(x)
  EXPECT_EQ(clauses("(exists x (P x))", true), "{{~P(x)}}");
}

TEST(Clausify, SkolemArgumentsFollowQuantifierOrder) {
  EXPECT_EQ(clauses("(forall x (forall y (exists z (R x y z))))"), "{{R(x,y,sk0(x,y))}}");
  EXPECT_EQ(clauses("(forall x (and (exists y (P x y)) (exists z (Q z))))"),
            "{{P(x,sk0(x))}, {Q(sk1(x))}}");
}

TEST(Clausify, DistributesDisjunctionOverConjunction) {
  EXPECT_EQ(clauses("(or (and P Q) R)"), "{{P, R}, {Q, R}}");
  EXPECT_EQ(clauses("(iff P Q)"), "{{~P, Q}, {~Q, P}}");
}

TEST(Clausify, DropsTautologiesAndRenamesReboundVariables) {
  EXPECT_EQ(clauses("(or P (not P))"), "{}");
  EXPECT_EQ(clauses("(and (forall x (P x)) (forall x (Q x)))"), "{{P(x)}, {Q(x_1)}}");
}

TEST(Clausify, RejectsOpenFormula) {
  const Formula open = Formula::make_atom(Atom{"P", {Term::variable("x")}});
  EXPECT_THROW(clausify(open, false), Error);
}

TEST(Clausify, SharedCounterAcrossSentences) {
  Clausifier c;
  EXPECT_EQ(c.clausify(parse_formula("(exists x (P x))"), false).to_string(), "{{P(sk0)}}");
  EXPECT_EQ(c.clausify(parse_formula("(exists x (Q x))"), false).to_string(), "{{Q(sk1)}}");
}

TEST(Clausify, SkolemNamesAvoidExistingSymbols) {
  EXPECT_EQ(clauses("(and (P sk0) (exists x (Q x)))"), "{{P(sk0)}, {Q(sk1)}}");
}

#include <doctest.h>

#include <random>

#include "meadow/decide.hpp"
#include "support.hpp"

using namespace meadow;

namespace {

Verdict decide(std::string_view a, std::string_view b, std::size_t budget = kDefaultSearchBudget) {
  return equal_ccm0(parse(a), parse(b), budget);
}

bool separates(const Term& t, const Term& r, const Assignment& a) {
  Model q = Model::qbot();
  return eval(t, a, q) != eval(r, a, q);
}

}  // namespace

TEST_CASE("verdict examples") {
  CHECK(decide("x*x^-1", "1 + 0*x^-1").equal);
  CHECK(decide("x*x*x^-1", "x + 0*x^-1").equal);
  CHECK(decide("1*0^-1", "bot").equal);

  Verdict p2 = decide("x*x^-1", "1");
  CHECK_FALSE(p2.equal);
  CHECK(p2.failed == Condition::P2);
  REQUIRE(p2.counterexample);
  CHECK(Model::qbot().is_bottom(p2.counterexample->at("x")));

  Verdict p1 = decide("(x*x - 1)*(x - 1)^-1", "x + 1");
  CHECK(p1.failed == Condition::P1);
  REQUIRE(p1.counterexample);
  CHECK(p1.counterexample->at("x") == Value(QBot(1)));

  Verdict none = decide("1/(x*x + 1)", "1/(x*x + 2)");
  CHECK(none.failed == Condition::P1);
  CHECK_FALSE(none.counterexample);
  CHECK_FALSE(none.note.empty());

  Verdict p3 = decide("x + 1", "x + 2");
  CHECK(p3.failed == Condition::P3);
  REQUIRE(p3.counterexample);
  CHECK(separates(parse("x + 1"), parse("x + 2"), *p3.counterexample));

  Verdict bm = decide("bot", "x");
  CHECK(bm.failed == Condition::BottomMismatch);
  REQUIRE(bm.counterexample);

  CHECK(decide("2 * 2^-1", "1").equal);
  CHECK(decide("x", "y").failed == Condition::P2);
  CHECK(to_string(Condition::BottomMismatch) == "bottom-mismatch");
  CHECK_FALSE(decide("x*x^-1", "1", 0).counterexample);
}

TEST_CASE("derivation closure: axiom rewrites never change the verdict") {
  std::mt19937_64 rng(71);
  testing::TermShape shape{5, 0.3, 0.02, 0.25};
  for (int i = 0; i < 300; ++i) {
    Term t = testing::random_term(rng, 3, shape);
    Term r = t;
    std::uniform_int_distribution<int> steps(1, 5);
    for (int k = steps(rng); k > 0; --k) r = testing::rewrite_step(rng, r, 3);
    Verdict v = equal_ccm0(t, r, 0);
    CHECK_MESSAGE(v.equal, render(t), "  vs  ", render(r));
  }
}

TEST_CASE("Equal verdicts survive random evaluation; NotEqual witnesses separate") {
  std::mt19937_64 rng(73);
  testing::TermShape shape{4, 0.35, 0.03, 0.3};
  const Model q = Model::qbot();
  int equal = 0;
  for (int i = 0; i < 3000; ++i) {
    Term t = testing::random_term(rng, 2, shape);
    Term r = testing::random_term(rng, 2, shape);
    Verdict v = equal_ccm0(t, r, 200);
    if (v.equal) {
      ++equal;
      for (int k = 0; k < 200; ++k) {
        Assignment a = testing::random_assignment(rng, q, 2, 0.2);
        CHECK(eval(t, a, q) == eval(r, a, q));
      }
    } else {
      if (v.failed == Condition::P2) REQUIRE(v.counterexample);
      if (v.counterexample) CHECK(separates(t, r, *v.counterexample));
    }
  }
  CHECK(equal > 50);
}

TEST_CASE("equal_ccm0 is reflexive, symmetric and transitive on samples") {
  std::mt19937_64 rng(79);
  testing::TermShape shape{4, 0.35, 0.03, 0.3};
  std::vector<Term> pool;
  for (int i = 0; i < 60; ++i) {
    Term t = testing::random_term(rng, 2, shape);
    pool.push_back(t);
    pool.push_back(testing::rewrite_step(rng, t, 2));
  }
  for (const auto& a : pool) CHECK(equal_ccm0(a, a, 0).equal);
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      bool ab = equal_ccm0(a, b, 0).equal;
      CHECK(ab == equal_ccm0(b, a, 0).equal);
      if (!ab) continue;
      for (const auto& c : pool) {
        if (equal_ccm0(b, c, 0).equal) CHECK(equal_ccm0(a, c, 0).equal);
      }
    }
  }
}

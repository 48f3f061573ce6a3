#include <doctest.h>

#include <random>

#include "meadow/decide.hpp"
#include "meadow/lawcheck.hpp"
#include "meadow/normal.hpp"
#include "support.hpp"

using namespace meadow;
using FNF = FractionNormalForm;

namespace {

const MultiPoly x = MultiPoly::variable("x");
const MultiPoly y = MultiPoly::variable("y");

using Names = std::set<std::string>;

void check_fnf(const FNF& f, const MultiPoly& num, const MultiPoly& den, const Names& support) {
  REQUIRE_FALSE(f.is_bottom());
  CHECK(f.numerator() == num);
  CHECK(f.denominator() == den);
  CHECK(f.support() == support);
}

}  // namespace

TEST_CASE("to_fraction examples") {
  check_fnf(to_fraction(parse("1/x + 1/y")), x + y, x * y, {"x", "y"});
  check_fnf(to_fraction(parse("x + (-x)")), 0, 1, {"x"});
  CHECK(to_fraction(parse("bot + x")).is_bottom());
  check_fnf(to_fraction(parse("0 * (x * x)")), 0, 1, {"x"});
  check_fnf(to_fraction(parse("x*x*x^-1")), x * x, x, {"x"});
  check_fnf(to_fraction(parse("x*x^-1")), x, x, {"x"});
  CHECK(to_fraction(parse("1/0")).is_bottom());
  CHECK(to_fraction(parse("(x - x)^-1")).is_bottom());
}

TEST_CASE("frac operations") {
  FNF fx = FNF::make(x, 1, {"x"});
  check_fnf(frac_add(fx, FNF::make(0, x, {"x"})), x * x, x, {"x"});
  FNF half = FNF::make(1, 2);
  FNF sum = frac_add(half, half);
  check_fnf(sum, 1, 1, {});
  CHECK(sum.guard() == 2);
  CHECK(frac_add(FNF::bottom(), fx).is_bottom());
  check_fnf(frac_mul(fx, FNF::make(1, x, {"x"})), x, x, {"x"});
  check_fnf(frac_neg(fx), -x, 1, {"x"});
  CHECK(frac_mul(FNF::bottom(), FNF::make(1, 1)).is_bottom());
  check_fnf(frac_inv(fx), 1, x, {"x"});
  CHECK(frac_inv(FNF::make(0, 1, {"x"})).is_bottom());
  CHECK(frac_inv(FNF::bottom()).is_bottom());
  // The inverse keeps the zeros of the old denominator.
  FNF q = frac_inv(FNF::make(x + 1, x, {"x"}));
  CHECK(divide_exact(q.denominator(), x));
  CHECK(divide_exact(q.denominator(), x + 1));
}

TEST_CASE("make normalizes the denominator") {
  FNF f = FNF::make(x, -2 * y + 4, {"x"});
  check_fnf(f, mpq_class(-1, 2) * x, y - 2, {"x", "y"});
  CHECK(f.guard() == 2);
  CHECK(FNF::make(x, 0, {"x"}).is_bottom());
}

TEST_CASE("soundness against direct evaluation") {
  std::mt19937_64 rng(61);
  const Model q = Model::qbot();
  const Model f7 = Model::fp_bot(7);
  for (int i = 0; i < 1500; ++i) {
    Term t = testing::random_term(rng, 4);
    FNF f = to_fraction(t);
    if (!f.is_bottom()) CHECK(f.support() == vars(t));
    for (const Model* m : {&q, &f7}) {
      for (int k = 0; k < 20; ++k) {
        Assignment a = testing::random_assignment(rng, *m, 4, 0.2);
        Value expected = eval(t, a, *m);
        CHECK_MESSAGE(testing::fraction_oracle(f, a, *m) == expected, render(t), " in ", m->name());
        CHECK(eval_fraction(f, a, *m) == expected);
        CHECK(eval(to_term(f), a, *m) == expected);
      }
    }
  }
}

TEST_CASE("guard keeps F_p evaluation exact") {
  // 2 * 2^-1 is 1 over Q but bottom in F2.
  FNF f = to_fraction(parse("2 * 2^-1"));
  check_fnf(f, 1, 1, {});
  CHECK(f.guard() == 2);
  CHECK(Model::fp_bot(2).is_bottom(eval_fraction(f, {}, Model::fp_bot(2))));
  CHECK(eval_fraction(f, {}, Model::fp_bot(3)) == Value(FpBot(3, 1)));
}

TEST_CASE("to_fraction of the rendered normal form is the same normal form") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 1000; ++i) {
    FNF f = to_fraction(testing::random_term(rng, 3));
    CHECK(to_fraction(parse(render(to_term(f)))) == f);
  }
}

TEST_CASE("derived identities normalize to equal forms") {
  for (const auto& entry : find_suite("identities").entries) {
    const Law& law = std::get<Law>(entry);
    FNF l = to_fraction(law.conclusion.lhs);
    FNF r = to_fraction(law.conclusion.rhs);
    CHECK_MESSAGE(equal_ccm0(law.conclusion.lhs, law.conclusion.rhs, 0).equal, law.name);
    CHECK(l.is_bottom() == r.is_bottom());
    if (!l.is_bottom()) CHECK(l.support() == r.support());
  }
}

#include <catch2/catch_amalgamated.hpp>

#include "relcalc/cor/parse.hpp"
#include "relcalc/fo/parse.hpp"
#include "relcalc/harness/gen.hpp"
#include "relcalc/sem/validity.hpp"
#include "relcalc/trans/standard.hpp"

using namespace relcalc;
using fo::Var;

namespace {

model::Structure two_elem() {
  model::Structure m;
  m.universe = 2;
  model::Relation a(2), b(2);
  a.set(0, 1);
  b.set(1, 0);
  m.add("a", std::move(a));
  m.add("b", std::move(b));
  return m;
}

}  // namespace

TEST_CASE("FO evaluation on the two-element example") {
  const auto m = two_elem();
  const Var x{"x"}, y{"y"};

  const auto atom_set = sem::eval_fo(m, fo::parse_fo("a(x,y)"), {x, y});
  CHECK(atom_set.count() == 1);
  CHECK(atom_set.contains({{x, 0}, {y, 1}}));

  const auto refl = sem::eval_fo(m, fo::parse_fo("x = x"), {x});
  CHECK(refl.count() == m.universe);

  const auto ex = sem::eval_fo(m, fo::parse_fo("exists y. a(x,y)"), {x});
  CHECK(ex.count() == 1);
  CHECK(ex.contains({{x, 0}}));
}

TEST_CASE("holds_fo") {
  const auto m = two_elem();
  CHECK(sem::holds_fo(m, fo::parse_fo("forall x. x = x")));
  CHECK_FALSE(sem::holds_fo(m, fo::parse_fo("forall x. exists y. a(x,y)")));
  CHECK_FALSE(sem::holds_fo(m, fo::parse_fo("false")));
  CHECK(sem::holds_fo(m, fo::parse_fo("true")));
  CHECK_THROWS_AS(sem::holds_fo(m, fo::parse_fo("missing(x,x)")), SemanticError);
  // the support set must cover the free variables
  CHECK_THROWS_AS(sem::eval_fo(m, fo::parse_fo("a(x,y)"), {Var{"x"}}), SemanticError);
}

TEST_CASE("term evaluation on the two-element example") {
  const auto m = two_elem();
  CHECK(sem::eval_term(m, cor::parse_cor_term("a")).pairs() ==
        std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(sem::eval_term(m, cor::parse_cor_term("a ; b")).pairs() ==
        std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(sem::eval_term(m, cor::parse_cor_term("id^c & id")).empty());
  CHECK(sem::eval_term(m, cor::parse_cor_term("top")) == model::Relation::full(2));
  CHECK(sem::eval_term(m, cor::parse_cor_term("bot")).empty());
  CHECK(sem::eval_term(m, cor::parse_cor_term("a^T")).pairs() ==
        std::vector<std::pair<int, int>>{{1, 0}});
  CHECK_THROWS_AS(sem::eval_term(m, cor::parse_cor_term("zz")), SemanticError);
  CHECK(sem::eval_term(m, cor::parse_cor_term("zz"), true).empty());
}

TEST_CASE("quantifier-free formula satisfaction") {
  const auto m = two_elem();
  CHECK(sem::holds_qf(m, cor::parse_cor_qf("id = id")));
  CHECK(sem::holds_qf(m, cor::parse_cor_qf("a <= top")));
  CHECK_FALSE(sem::holds_qf(m, cor::parse_cor_qf("a = b")));
  CHECK(sem::holds_qf(m, cor::parse_cor_qf("!(a = b) /\\ a ; b <= id")));
}

TEST_CASE("bounded validity") {
  const auto r1 = sem::check_valid_upto(fo::parse_fo("forall x. x = x"), {"a"}, 2);
  CHECK(r1.valid);

  const auto r2 = sem::check_valid_upto(fo::parse_fo("forall x. a(x,x)"), {"a"}, 1);
  REQUIRE_FALSE(r2.valid);
  CHECK(r2.counterexample->universe == 1);
  CHECK(r2.counterexample->at("a").empty());

  const auto r3 = sem::check_valid_upto(cor::parse_cor_qf("top = top"), {}, 3);
  CHECK(r3.valid);

  CHECK_THROWS_AS(sem::check_valid_upto(fo::parse_fo("forall x. x = x"), {"a"}, 3, 100),
                  BudgetError);
}

TEST_CASE("set operations agree with derived operators") {
  harness::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + rng.below(3);
    const auto m = harness::gen_structure(rng, {"a", "b"}, n);
    const auto t = harness::gen_term(rng, {"a", "b"}, 3);
    const auto s = harness::gen_term(rng, {"a", "b"}, 3);
    CHECK(sem::eval_term(m, cor::union_(t, s)) ==
          sem::eval_term(m, t).unite(sem::eval_term(m, s)));
    // dagger is the dual of composition
    CHECK(sem::eval_term(m, cor::dagger(t, s)) ==
          sem::eval_term(m, cor::comp(cor::dot(cor::comp(t), cor::comp(s)))));
  }
}

TEST_CASE("enlarging the support multiplies the assignment count") {
  harness::Rng rng(37);
  const Var x{"x"}, y{"y"}, unused{"unused"};
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + rng.below(3);
    const auto m = harness::gen_structure(rng, {"a"}, n);
    const auto f = harness::gen_formula(rng, {"a"}, {x, y}, 3);
    const auto base = sem::eval_fo(m, f, {x, y});
    const auto padded = sem::eval_fo(m, f, {x, y, unused});
    CHECK(padded.count() == base.count() * n);
  }
}

TEST_CASE("satisfaction is invariant under renaming bound variables") {
  harness::Rng rng(41);
  const Var x{"x"}, y{"y"};
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + rng.below(3);
    const auto m = harness::gen_structure(rng, {"a"}, n);
    const auto body = harness::gen_formula(rng, {"a"}, {x, y}, 3);
    const auto original = fo::exists(x, fo::exists(y, body));
    const auto renamed = fo::exists(Var{"u"}, fo::exists(Var{"v"},
                          fo::rename_var(fo::rename_var(body, x, Var{"u"}), y, Var{"v"})));
    CHECK(sem::holds_fo(m, original) == sem::holds_fo(m, renamed));
  }
}

TEST_CASE("the two semantics agree through the standard translation") {
  harness::Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + rng.below(3);
    const auto m = harness::gen_structure(rng, {"a", "b"}, n);
    const auto t = harness::gen_term(rng, {"a", "b"}, 4);
    const auto st = trans::standard_translation(t);
    const auto asgn = sem::eval_fo(m, st, {trans::st_x1(), trans::st_x2()});
    model::Relation projected(n);
    for (const auto& a : asgn.assignments())
      projected.set(a.at(trans::st_x1()), a.at(trans::st_x2()));
    CHECK(projected == sem::eval_term(m, t));
  }
}

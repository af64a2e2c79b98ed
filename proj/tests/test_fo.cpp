#include <catch2/catch_amalgamated.hpp>

#include "relcalc/fo/ast.hpp"
#include "relcalc/fo/parse.hpp"
#include "relcalc/fo/prenex.hpp"
#include "relcalc/fo/print.hpp"
#include "relcalc/harness/gen.hpp"
#include "relcalc/model/enumerate.hpp"
#include "relcalc/sem/eval_fo.hpp"

using namespace relcalc;
using fo::Var;

TEST_CASE("parsing produces the desugared core tree") {
  const Var x{"x"}, y{"y"};

  CHECK(fo::struct_eq(fo::parse_fo("a(x,y)"), fo::atom("a", x, y)));
  CHECK(fo::struct_eq(fo::parse_fo("x = y"), fo::eq(x, y)));

  // forall x, f  is  !exists x, !f
  CHECK(fo::struct_eq(fo::parse_fo("forall x. !a(x,x)"),
                      fo::not_(fo::exists(x, fo::not_(fo::not_(fo::atom("a", x, x)))))));

  // true is exists _t, _t = _t with the reserved variable
  const auto t = fo::parse_fo("true");
  REQUIRE(t->get_if<fo::Exists>() != nullptr);
  CHECK(t->get_if<fo::Exists>()->bound == fo::truth_var());
  CHECK(fo::struct_eq(t, fo::truth()));
  CHECK(fo::struct_eq(fo::parse_fo("false"), fo::falsity()));

  CHECK(fo::struct_eq(fo::parse_fo("a(x,y) | b(x,y)"),
                      fo::or_(fo::atom("a", x, y), fo::atom("b", x, y))));
  CHECK(fo::struct_eq(fo::parse_fo("a(x,y) -> b(x,y)"),
                      fo::implies(fo::atom("a", x, y), fo::atom("b", x, y))));
  CHECK(fo::struct_eq(fo::parse_fo("a(x,y) <-> b(x,y)"),
                      fo::iff(fo::atom("a", x, y), fo::atom("b", x, y))));
}

TEST_CASE("precedence and associativity") {
  // ! > & > | > -> > <->, & and | left, -> right, quantifier scope max right
  CHECK(fo::struct_eq(fo::parse_fo("!a(x,x) & b(x,x)"),
                      fo::and_(fo::not_(fo::parse_fo("a(x,x)")), fo::parse_fo("b(x,x)"))));
  CHECK(fo::struct_eq(fo::parse_fo("a(x,x) & b(x,x) & c(x,x)"),
                      fo::parse_fo("(a(x,x) & b(x,x)) & c(x,x)")));
  CHECK(fo::struct_eq(fo::parse_fo("a(x,x) -> b(x,x) -> c(x,x)"),
                      fo::parse_fo("a(x,x) -> (b(x,x) -> c(x,x))")));
  CHECK(fo::struct_eq(fo::parse_fo("a(x,x) | b(x,x) & c(x,x)"),
                      fo::parse_fo("a(x,x) | (b(x,x) & c(x,x))")));
  CHECK(fo::struct_eq(fo::parse_fo("exists v. a(v,v) & b(v,v)"),
                      fo::exists(Var{"v"}, fo::parse_fo("a(v,v) & b(v,v)"))));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(fo::parse_fo("a(x,"), ParseError);
  CHECK_THROWS_AS(fo::parse_fo("(a(x,y)"), ParseError);
  CHECK_THROWS_AS(fo::parse_fo("A(x,y)"), ParseError);  // malformed identifier
  CHECK_THROWS_AS(fo::parse_fo("a(x,y) &"), ParseError);
  CHECK_THROWS_AS(fo::parse_fo("exists . a(x,y)"), ParseError);
  try {
    fo::parse_fo("a(x,y) &\n& b(x,y)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 1);
  }
}

TEST_CASE("size measure follows the core clauses") {
  CHECK(fo::size_fo(fo::parse_fo("a(x,y)")) == 3);
  CHECK(fo::size_fo(fo::parse_fo("x = y")) == 3);
  CHECK(fo::size_fo(fo::exists(Var{"x"}, fo::parse_fo("a(x,y)"))) == 5);
  CHECK(fo::size_fo(fo::parse_fo("true")) == 5);
  CHECK(fo::size_fo(fo::parse_fo("false")) == 6);
  // sugar never gets its own size clause: |F or G| is the size of the
  // expansion !(!F & !G)
  const auto f = fo::parse_fo("a(x,y)");
  const auto g = fo::parse_fo("b(x,y)");
  CHECK(fo::size_fo(fo::or_(f, g)) == 1 + (1 + (1 + fo::size_fo(f)) + (1 + fo::size_fo(g))));
  CHECK(fo::size_fo(fo::parse_fo("forall x. !a(x,x)")) == 8);
}

TEST_CASE("variable sets") {
  const Var x{"x"}, y{"y"}, z{"z"};
  const auto f1 = fo::exists(x, fo::atom("a", x, y));
  CHECK(fo::vars_of(f1) == std::set<Var>{x, y});
  CHECK(fo::free_vars_of(f1) == std::set<Var>{y});

  const auto f2 = fo::eq(x, x);
  CHECK(fo::vars_of(f2) == std::set<Var>{x});
  CHECK(fo::free_vars_of(f2) == std::set<Var>{x});

  const auto f3 = fo::and_(fo::atom("a", x, y), fo::exists(y, fo::eq(y, z)));
  CHECK(fo::vars_of(f3) == std::set<Var>{x, y, z});

  CHECK(fo::is_fok(fo::parse_fo("a(x,y)"), 3));
  CHECK(fo::is_fok(fo::eq(x, x), 1));
  const auto f4 = fo::parse_fo("a(x1,x2) & a(x3,x4)");
  CHECK_FALSE(fo::is_fok(f4, 3));
  CHECK(fo::is_fok(f4, 4));
}

TEST_CASE("free variables are contained in all variables") {
  harness::Rng rng(7);
  const auto pool = std::vector<Var>{Var{"x"}, Var{"y"}, Var{"z"}};
  for (int i = 0; i < 200; ++i) {
    const auto f = harness::gen_formula(rng, {"a", "b"}, pool, 4);
    const auto all = fo::vars_of(f);
    for (const auto& v : fo::free_vars_of(f)) CHECK(all.count(v) == 1);
    // binding removes the bound variable from the free set
    const auto& free = fo::free_vars_of(f);
    for (const auto& v : pool) {
      const auto bound_free = fo::free_vars_of(fo::exists(v, f));
      CHECK(bound_free.count(v) == 0);
      for (const auto& w : bound_free) CHECK(free.count(w) == 1);
    }
  }
}

TEST_CASE("print/parse round trip is the identity on core trees") {
  harness::Rng rng(11);
  const auto pool = std::vector<Var>{Var{"x"}, Var{"y"}, Var{"z"}, Var{"w"}};
  for (int i = 0; i < 300; ++i) {
    const auto f = harness::gen_formula(rng, {"a", "b", "c"}, pool, 5);
    const auto printed = fo::print_fo(f);
    CAPTURE(printed);
    CHECK(fo::struct_eq(fo::parse_fo(printed), f));
  }
  // sugar-heavy shapes keep round-tripping after re-sugaring
  for (const char* s : {"a(x,y) -> (b(y,x) <-> c(x,x))", "forall x. exists y. a(x,y) | x = y",
                       "!(true -> false)", "x = y & (exists z. a(z,z))"}) {
    const auto f = fo::parse_fo(s);
    CHECK(fo::struct_eq(fo::parse_fo(fo::print_fo(f)), f));
  }
}

TEST_CASE("prenex pulls and merges quantifiers") {
  const Var x{"x"}, y{"y"};
  const auto f1 = fo::and_(fo::exists(x, fo::atom("a", x, x)), fo::exists(y, fo::atom("b", y, y)));
  const auto p1 = fo::prenex(f1, {x, y});
  CHECK(fo::struct_eq(
      p1, fo::exists(x, fo::exists(y, fo::and_(fo::atom("a", x, x), fo::atom("b", y, y))))));

  // !exists x, a(x,x) has a one-universal prenex form
  const auto p2 = fo::prenex(fo::not_(fo::exists(x, fo::atom("a", x, x))), {x});
  const auto pc2 = fo::classify_prefix(p2);
  REQUIRE(pc2.prefix.size() == 1);
  CHECK(pc2.prefix[0].first == fo::Quant::Forall);

  // same-variable existentials across a disjunction merge
  const auto f3 = fo::or_(fo::exists(x, fo::atom("a", x, x)), fo::exists(x, fo::atom("b", x, x)));
  const auto p3 = fo::prenex(f3, {x});
  const auto pc3 = fo::classify_prefix(p3);
  REQUIRE(pc3.prefix.size() == 1);
  CHECK(pc3.prefix[0].first == fo::Quant::Exists);

  // shadowed re-quantification is renamed apart
  const auto f4 = fo::exists(x, fo::and_(fo::atom("a", x, x), fo::exists(x, fo::atom("b", x, x))));
  const auto p4 = fo::prenex(f4);
  CHECK(fo::classify_prefix(p4).prefix.size() == 2);

  CHECK_THROWS_AS(fo::prenex(fo::atom("a", x, y), {x}), SemanticError);  // not a sentence
  CHECK_THROWS_AS(fo::prenex(f1, {x}), SemanticError);                   // y missing
}

TEST_CASE("prenex preserves evaluation on all structures up to size 3") {
  harness::Rng rng(23);
  const auto pool = std::vector<Var>{Var{"x"}, Var{"y"}, Var{"z"}};
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const auto f = harness::gen_sentence(rng, {"a"}, pool, 3);
    const auto p = fo::prenex(f);
    for (int size = 1; size <= 3; ++size) {
      model::StructureEnumerator en({"a"}, size);
      while (auto m = en.next()) {
        CAPTURE(fo::print_fo(f), fo::print_fo(p), size);
        REQUIRE(sem::holds_fo(*m, f) == sem::holds_fo(*m, p));
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("prefix classification") {
  const auto f1 = fo::parse_fo("forall x. forall y. forall z. exists w. a(x,w)");
  const auto pc1 = fo::classify_prefix(f1);
  CHECK(pc1.pattern() == "A3E1");
  CHECK(fo::in_godel_class(pc1, fo::Quant::Forall));
  CHECK_FALSE(pc1.uses_equality);
  CHECK(pc1.max_predicate_arity == 2);

  const auto pc2 = fo::classify_prefix(fo::parse_fo("forall x. forall y. x = y"));
  CHECK_FALSE(fo::in_godel_class(pc2, fo::Quant::Forall));  // equality present

  // four leading universals fall outside the class
  const auto pc3 =
      fo::classify_prefix(fo::parse_fo("forall x. forall y. forall z. forall w. a(x,w)"));
  CHECK_FALSE(fo::in_godel_class(pc3, fo::Quant::Forall));

  CHECK_THROWS_AS(fo::classify_prefix(fo::parse_fo("a(x,y) & exists z. a(z,z)")), SemanticError);

  // negation dualizes the prefix
  const auto neg = fo::negate_prenex(f1);
  CHECK(fo::classify_prefix(neg).pattern() == "E3A1");
}

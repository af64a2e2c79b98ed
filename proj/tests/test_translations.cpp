#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "relcalc/cor/parse.hpp"
#include "relcalc/cor/print.hpp"
#include "relcalc/cor/sigma2.hpp"
#include "relcalc/fo/parse.hpp"
#include "relcalc/fo/prenex.hpp"
#include "relcalc/fo/print.hpp"
#include "relcalc/harness/gen.hpp"
#include "relcalc/harness/suites.hpp"
#include "relcalc/harness/witness.hpp"
#include "relcalc/model/ktuple.hpp"
#include "relcalc/sem/validity.hpp"
#include "relcalc/trans/arity.hpp"
#include "relcalc/trans/equality_elim.hpp"
#include "relcalc/trans/fo3.hpp"
#include "relcalc/trans/godel.hpp"
#include "relcalc/trans/schroder.hpp"
#include "relcalc/trans/standard.hpp"
#include "relcalc/trans/tk.hpp"

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

bool gamma_contains(const std::vector<cor::TermPtr>& gamma, const cor::TermPtr& t) {
  return std::any_of(gamma.begin(), gamma.end(),
                     [&](const cor::TermPtr& g) { return cor::struct_eq(g, t); });
}

}  // namespace

TEST_CASE("Gamma^(1) is the expected equation set") {
  const auto eqs = trans::gamma_k(1, {"a"});
  std::set<std::string> printed;
  for (const auto& eq : eqs) printed.insert(cor::print_qf(eq));
  const std::set<std::string> expected = {
      "u = pi1",
      "e1_1 = top & pi1 ; pi1^T",
      "q1 = top & top",
      "u <= id",
      "pi1^T ; pi1 <= id",
      "id <= pi1 ; u ; pi1^T",
      "top ; u <= q1 ; pi1",
      "id = e1_1",
      "top ; u ; top = top",
      "a <= u ; top ; u",
  };
  CHECK(printed == expected);
}

TEST_CASE("Gamma^(k) defines u as the intersection of the projections") {
  bool found = false;
  for (const auto& eq : trans::gamma_k(2, {})) {
    if (cor::print_qf(eq) == "u = pi1 & pi2") found = true;
  }
  CHECK(found);
  // instantiated only over the used relation symbols, in linear total size
  const auto small = trans::gamma_k(3, {});
  const auto larger = trans::gamma_k(3, {"a", "b"});
  CHECK(larger.size() == small.size() + 2);
  CHECK_THROWS_AS(trans::gamma_k(2, {"pi1"}), SemanticError);
}

TEST_CASE("T^(k) clause shapes") {
  const auto f1 = fo::parse_fo("a(x,y)");
  CHECK(cor::print_term(trans::t_k(f1, trans::make_unit(f1, 1))) == "pi1 ; a ; pi2^T & id");

  // the negation clause carries the extra & id that keeps the denotation
  // inside the diagonal (the bare complement would not)
  const auto f2 = fo::parse_fo("!a(x,x)");
  CHECK(cor::print_term(trans::t_k(f2, trans::make_unit(f2, 1))) ==
        "(pi1 ; a ; pi1^T & id)^c & id");

  const auto f3 = fo::parse_fo("x = y");
  CHECK(cor::print_term(trans::t_k(f3, trans::make_unit(f3, 1))) == "pi1 ; pi2^T & id");

  const auto f4 = fo::parse_fo("exists x. a(x,x)");
  CHECK(cor::print_term(trans::t_k(f4, trans::make_unit(f4, 1))) ==
        "q1 ; (pi1 ; a ; pi1^T & id) ; q1^T & id");

  const auto unit = trans::make_unit(f1, 1);
  CHECK_THROWS_AS(trans::t_k(fo::parse_fo("a(z,z)"), unit), SemanticError);
}

TEST_CASE("the equality clause denotes the diagonal of equal components") {
  // on M^(2) of the two-element example, T(x1 = x2) holds exactly on the
  // constant tuples 00 and 11
  const auto f = fo::parse_fo("x = y");
  const auto term = trans::t_k(f, trans::make_unit(f, 1));
  const auto m2 = model::k_tuple_structure(two_elem(), 2, {});
  CHECK(sem::eval_term(m2, term).pairs() ==
        std::vector<std::pair<int, int>>{{0, 0}, {3, 3}});
}

TEST_CASE("variable indexing follows first occurrence") {
  const auto f = fo::parse_fo("exists q. a(q,p) & b(r,q)");
  const auto unit = trans::make_unit(f, 1);
  CHECK(unit.k == 3);
  CHECK(unit.var_index.at(Var{"q"}) == 1);
  CHECK(unit.var_index.at(Var{"p"}) == 2);
  CHECK(unit.var_index.at(Var{"r"}) == 3);
}

TEST_CASE("fo_to_cor on valid and unsatisfiable sentences") {
  // a valid sentence translates to a formula with no counterexample at all,
    // not merely none among k-tuple structures
  const auto valid = trans::fo_to_cor(fo::parse_fo("forall x. x = x"));
  const auto sig = cor::rel_vars_of(valid);
  CHECK(sem::check_valid_upto(valid, sig, 2).valid);

  // an unsatisfiable sentence is refuted on every M^(k)
  const auto bad = fo::parse_fo("exists x. !(x = x)");
  const auto translated = trans::fo_to_cor(bad);
  const auto unit = trans::make_unit(bad, 1);
  harness::Rng rng(51);
  for (int i = 0; i < 20; ++i) {
    const auto m = harness::gen_structure(rng, {"a"}, 1 + rng.below(3));
    CHECK_FALSE(sem::holds_qf(model::k_tuple_structure(m, unit.k, {}), translated));
  }
}

TEST_CASE("size of fo_to_cor output stays linear on the quantifier chain family") {
  long long worst_num = 0, worst_den = 1;
  for (int k : {4, 8, 16, 32, 64}) {
    const auto f = harness::chain_formula(k);
    const long long in = fo::size_fo(f);
    const long long out = cor::size_qf(trans::fo_to_cor(f));
    if (out * worst_den > worst_num * in) {
      worst_num = out;
      worst_den = in;
    }
  }
  CHECK(worst_num < 50 * worst_den);  // the documented constant
}

TEST_CASE("the defined relations of a k-tuple structure satisfy their closed forms") {
  // u is the intersection of the projections, q_i relates tuples equal off
  // coordinate i, and each materialized e-interval is the intersection of the
  // pi_j ; pi_j^T bands it spans.
  harness::Rng rng(47);
  for (int round = 0; round < 15; ++round) {
    const int n = 1 + rng.below(3), k = 1 + rng.below(3);
    const auto m = harness::gen_structure(rng, {"a"}, n);
    const auto mk = model::k_tuple_structure(m, k, {"a"});
    auto band = [&](int j) {
      return cor::dot(cor::rel(model::pi_name(j)), cor::conv(cor::rel(model::pi_name(j))));
    };
    std::vector<cor::TermPtr> all_bands;
    for (int j = 1; j <= k; ++j) all_bands.push_back(cor::rel(model::pi_name(j)));
    CHECK(sem::eval_term(mk, trans::inter_all(all_bands)) == mk.at("u"));
    for (int i = 1; i <= k; ++i) {
      std::vector<cor::TermPtr> off;
      for (int j = 1; j <= k; ++j)
        if (j != i) off.push_back(band(j));
      const auto q = off.empty() ? model::Relation::full(mk.universe)
                                 : sem::eval_term(mk, trans::inter_all(off));
      CHECK(q == mk.at(model::q_name(i)));
    }
    for (int i = 1; i <= k; ++i) {
      for (auto [lo, hi] : {std::pair{1, i}, std::pair{i, k}}) {
        std::vector<cor::TermPtr> span;
        for (int j = lo; j <= hi; ++j) span.push_back(band(j));
        CHECK(sem::eval_term(mk, trans::inter_all(span)) == mk.at(model::e_name(lo, hi)));
      }
    }
  }
}

TEST_CASE("Schroder-Tarski translation") {
  // pass (i) only
  const auto eq = cor::parse_cor_qf("a = top");
  CHECK(cor::print_term(trans::schroder_tarski(eq)) == "a & top | a^c & bot");
  // negation wraps in top ; _^c ; top
  CHECK(cor::print_term(trans::schroder_tarski(cor::qf_not(eq))) ==
        "top ; (a & top | a^c & bot)^c ; top");

  harness::Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + rng.below(3);
    const auto m = harness::gen_structure(rng, {"a", "b"}, n);
    const auto f = harness::gen_qf(rng, {"a", "b"}, 3, 2);
    CHECK(sem::holds_qf(m, f) ==
          (sem::eval_term(m, trans::schroder_tarski(f)) == model::Relation::full(n)));
  }
}

TEST_CASE("standard translation clause shapes") {
  CHECK(fo::print_fo(trans::standard_translation(cor::parse_cor_term("a ; b"))) ==
        "exists z. a(x1,z) & b(z,x2)");
  CHECK(fo::print_fo(trans::standard_translation(cor::parse_cor_term("id"))) == "x1 = x2");
  CHECK(fo::print_fo(trans::standard_translation(cor::parse_cor_term("a^T"))) == "a(x2,x1)");
  CHECK(fo::print_fo(trans::standard_translation(cor::parse_cor_term("a^c"))) == "!a(x1,x2)");
  // the third variable is recycled, never a fourth one
  const auto deep = trans::standard_translation(cor::parse_cor_term("(a ; b) ; (a ; b)"));
  CHECK(fo::is_fok(deep, 3));
}

TEST_CASE("Tseitin translation introduces one name per distinct subterm") {
  const auto leaf = trans::tseitin(cor::rel("b"));
  REQUIRE(leaf.gamma.size() == 1);
  CHECK(cor::print_qf(leaf.gamma[0]) == leaf.root + " = b");

  // shared subterms share names
  const auto shared = trans::tseitin(cor::parse_cor_term("(b ; c) & (b ; c)"));
  CHECK(shared.gamma.size() == 4);  // b, c, b;c, and the intersection

  const auto env = trans::tseitin(cor::parse_cor_term("((b ; c)^c ; d)^c"));
  CHECK(env.gamma.size() == 7);
  const auto bc = cor::parse_cor_term("b ; c");
  const auto nbc = cor::comp(bc);
  const auto nbcd = cor::dot(nbc, cor::rel("d"));
  // defining equations follow the table, one per operator
  bool found_leaf = false, found_comp = false, found_dot = false;
  for (const auto& g : env.gamma) {
    const auto* e = g->get_if<cor::Equation>();
    REQUIRE(e != nullptr);
    if (cor::struct_eq(e->lhs, cor::rel(env.name_of(cor::rel("b")))) &&
        cor::struct_eq(e->rhs, cor::rel("b")))
      found_leaf = true;
    if (cor::struct_eq(e->lhs, cor::rel(env.name_of(nbc))) &&
        cor::struct_eq(e->rhs, cor::comp(cor::rel(env.name_of(bc)))))
      found_comp = true;
    if (cor::struct_eq(e->lhs, cor::rel(env.name_of(nbcd))) &&
        cor::struct_eq(e->rhs, cor::dot(cor::rel(env.name_of(nbc)),
                                        cor::rel(env.name_of(cor::rel("d"))))))
      found_dot = true;
  }
  CHECK(found_leaf);
  CHECK(found_comp);
  CHECK(found_dot);
}

TEST_CASE("sigma2 normalization of the worked example") {
  const auto input = cor::equation(cor::parse_cor_term("((b ; c)^c ; d)^c"), cor::top());
  const auto s2 = trans::sigma2_normalize(input);
  const auto& env = s2.env;

  auto name = [&](const char* t) { return env.name_of(cor::parse_cor_term(t)); };
  auto comp_name = [&](const std::string& v) { return s2.comp_name.at(v); };

  const std::string a_b = name("b"), a_c = name("c"), a_d = name("d");
  const std::string a_bc = name("b ; c");
  const std::string a_nbc = name("(b ; c)^c");
  const std::string a_nbcd = name("(b ; c)^c ; d");
  const std::string a_root = name("((b ; c)^c ; d)^c");
  CHECK(env.root == a_root);

  // the eight detector terms of the worked display, with complemented
  // variables replaced by their fresh names
  const std::vector<cor::TermPtr> expected = {
      cor::inter(cor::rel(a_bc), cor::dagger(cor::rel(comp_name(a_b)), cor::rel(comp_name(a_c)))),
      cor::inter(cor::rel(comp_name(a_bc)), cor::dot(cor::rel(a_b), cor::rel(a_c))),
      cor::inter(cor::rel(a_nbc), cor::rel(a_bc)),
      cor::inter(cor::comp(cor::rel(a_nbc)), cor::comp(cor::rel(a_bc))),
      cor::inter(cor::rel(a_nbcd),
                 cor::dagger(cor::rel(comp_name(a_nbc)), cor::rel(comp_name(a_d)))),
      cor::inter(cor::rel(comp_name(a_nbcd)), cor::dot(cor::rel(a_nbc), cor::rel(a_d))),
      cor::inter(cor::rel(a_root), cor::rel(a_nbcd)),
      cor::inter(cor::comp(cor::rel(a_root)), cor::comp(cor::rel(a_nbcd))),
  };
  for (const auto& t : expected) {
    CAPTURE(cor::print_term(t));
    CHECK(gamma_contains(s2.gamma, t));
  }

  const auto check = cor::check_sigma2(s2.formula);
  REQUIRE(std::holds_alternative<cor::Sigma2Shape>(check));
  CHECK(std::get<cor::Sigma2Shape>(check).residual == a_root);
}

TEST_CASE("sigma2 normalization accepts leaves and rejects converse and identity") {
  const auto leafy = trans::sigma2_normalize(cor::parse_cor_qf("b = top"));
  CHECK(std::holds_alternative<cor::Sigma2Shape>(cor::check_sigma2(leafy.formula)));

  try {
    trans::sigma2_normalize(cor::parse_cor_qf("b^T = top"));
    FAIL("converse must be rejected");
  } catch (const SemanticError& e) {
    CHECK(std::string(e.what()).find("b^T") != std::string::npos);
  }
  CHECK_THROWS_AS(trans::sigma2_normalize(cor::parse_cor_qf("b ; id = top")), SemanticError);
  CHECK_THROWS_AS(trans::sigma2_normalize(cor::parse_cor_qf("b = c")), SemanticError);
}

TEST_CASE("sigma2 normalization preserves bounded validity through witnesses") {
  harness::Rng rng(59);
  harness::TermGenOptions opt;
  opt.allow_conv = false;
  opt.allow_id = false;
  for (int i = 0; i < 30; ++i) {
    const auto t = harness::gen_term(rng, {"b", "c"}, 3, opt);
    const auto input = cor::equation(t, cor::top());
    const auto s2 = trans::sigma2_normalize(input);
    for (int size = 1; size <= 2; ++size) {
      model::StructureEnumerator en({"b", "c"}, size);
      while (auto m = en.next()) {
        const auto ext = harness::sigma2_extend(*m, s2);
        CAPTURE(cor::print_term(t), model::structure_to_string(*m));
        REQUIRE(sem::holds_qf(*m, input) == sem::holds_qf(ext, s2.formula));
      }
    }
  }
}

TEST_CASE("the worked example reduces to an E3A4 sentence") {
  const auto input = cor::equation(cor::parse_cor_term("((b ; c)^c ; d)^c"), cor::top());
  const auto g = trans::godel_reduce(input);
  const auto pc = fo::classify_prefix(g.sentence);
  CHECK(pc.pattern() == "E3A4");  // exists x y z, forall w1 w2 w3 w4
  CHECK_FALSE(pc.uses_equality);

  const auto npc = fo::classify_prefix(fo::negate_prenex(g.sentence));
  CHECK(npc.pattern() == "A3E4");
  CHECK(fo::in_godel_class(npc, fo::Quant::Forall));
}

TEST_CASE("godel_reduce pads composition-free inputs to three existentials") {
  const auto g = trans::godel_reduce(cor::parse_cor_qf("b = top"));
  const auto pc = fo::classify_prefix(g.sentence);
  CHECK(pc.pattern().rfind("E3", 0) == 0);
  CHECK(fo::in_godel_class(fo::classify_prefix(fo::negate_prenex(g.sentence)),
                           fo::Quant::Forall));
}

TEST_CASE("gamma_fo3 matches the primed axioms") {
  const auto axioms = trans::gamma_fo3(3, {"a"});
  std::set<std::string> printed;
  for (const auto& ax : axioms) printed.insert(fo::print_fo(ax));
  // the non-emptiness axiom
  CHECK(printed.count("exists x1. u(x1,x1)") == 1);
  // u below the identity
  CHECK(printed.count("forall x1. forall x2. u(x1,x2) -> x1 = x2") == 1);
  // domain/range guard for the used relation symbol
  CHECK(printed.count("forall x1. forall x2. a(x1,x2) -> u(x1,x1) & u(x2,x2)") == 1);
  // every axiom stays within the three-variable pool
  for (const auto& ax : axioms) CHECK(fo::is_fok(ax, 3));
}

TEST_CASE("T_z clause shapes") {
  const auto f = fo::parse_fo("a(p,q)");
  const auto unit = trans::make_unit(f, 3);
  const auto x1 = trans::fo3_pool()[0];
  CHECK(fo::print_fo(trans::t_z_k(f, unit, x1)) ==
        "exists x2. exists x3. pi1(x1,x2) & a(x2,x3) & pi2(x1,x3)");

  const auto feq = fo::parse_fo("p = q");
  CHECK(fo::print_fo(trans::t_z_k(feq, trans::make_unit(feq, 3), x1)) ==
        "exists x2. pi1(x1,x2) & pi2(x1,x2)");

  // the pivot rotates to the least pool variable distinct from z
  const auto fex = fo::parse_fo("exists p. a(p,p)");
  CHECK(fo::print_fo(trans::t_z_k(fex, trans::make_unit(fex, 3), x1)) ==
        "exists x2. q1(x1,x2) & exists x1. exists x3. pi1(x2,x1) & a(x1,x3) & pi1(x2,x3)");
}

TEST_CASE("fo_to_fo3 output is a three-variable formula") {
  for (const char* s : {"forall x. x = x", "exists x. exists y. exists z. exists w. a(x,w) & a(y,z)",
                       "forall x. exists y. a(x,y) -> x = y"}) {
    const auto out = trans::fo_to_fo3(fo::parse_fo(s));
    CAPTURE(s);
    CHECK(fo::is_fok(out, 3));
  }
}

TEST_CASE("equality elimination") {
  const auto r = trans::eliminate_equality(fo::parse_fo("x = y"));
  CHECK_FALSE(fo::uses_equality(r.formula));
  CHECK(fo::is_fok(r.formula, 3));
  // the matrix keeps its shape with E substituted for =
  const auto* conj = r.formula->get_if<fo::And>();
  REQUIRE(conj != nullptr);
  CHECK(fo::struct_eq(conj->rhs, fo::atom(r.e_name, Var{"x"}, Var{"y"})));

  // a fresh name is chosen when e is taken
  const auto r2 = trans::eliminate_equality(fo::parse_fo("e(x,y) & x = y"));
  CHECK(r2.e_name != "e");

  CHECK_THROWS_AS(trans::eliminate_equality(fo::parse_fo("a(x1,x2) & a(x3,x4)")), SemanticError);
}

TEST_CASE("arity reduction follows the projection scheme") {
  CHECK(fo::print_fo(trans::arity_reduce(trans::parse_ext("a(x,y,x) & a(y,y,x)"))) ==
        "(exists z. p1(z,x) & p2(z,y) & p3(z,x) & a_r(z,z)) & "
        "exists z. p1(z,y) & p2(z,y) & p3(z,x) & a_r(z,z)");
  // binary atoms pass through unchanged
  CHECK(fo::struct_eq(trans::arity_reduce(trans::parse_ext("a(x,y)")), fo::parse_fo("a(x,y)")));
  // unary atoms
  CHECK(fo::print_fo(trans::arity_reduce(trans::parse_ext("a(x)"))) ==
        "exists z. p1(z,x) & a_r(z,z)");
  // the bound variable avoids the formula's own variables
  const auto clash = trans::arity_reduce(trans::parse_ext("a(z,z,z)"));
  CHECK(fo::vars_of(clash).size() == 2);
  CHECK_THROWS_AS(trans::arity_reduce(trans::parse_ext("a(x,y) & a(x,y,x)")), SemanticError);
}

TEST_CASE("arity reduction preserves satisfaction under the intended expansion") {
  // a(x,y,x) holds iff some witness z projects to the arguments; check on a
  // hand-built structure
  const auto reduced = trans::arity_reduce(trans::parse_ext("exists x. exists y. a(x,y,x)"));
  model::Structure m;
  m.universe = 2;
  model::Relation p1(2), p2(2), p3(2), ar(2);
  // witness vertex 1 encodes the triple (0, 1, 0)
  p1.set(1, 0);
  p2.set(1, 1);
  p3.set(1, 0);
  ar.set(1, 1);
  m.add("p1", std::move(p1));
  m.add("p2", std::move(p2));
  m.add("p3", std::move(p3));
  m.add("a_r", std::move(ar));
  CHECK(sem::holds_fo(m, reduced));
  model::Structure empty;
  empty.universe = 2;
  empty.add("p1", model::Relation(2));
  empty.add("p2", model::Relation(2));
  empty.add("p3", model::Relation(2));
  empty.add("a_r", model::Relation(2));
  CHECK_FALSE(sem::holds_fo(empty, reduced));
}

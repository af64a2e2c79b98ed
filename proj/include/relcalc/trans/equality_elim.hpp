#pragma once

#include <set>
#include <string>
#include <vector>

#include "relcalc/errors.hpp"
#include "relcalc/fo/ast.hpp"
#include "relcalc/trans/fold.hpp"

namespace relcalc::trans {

struct EqualityElimResult {
  fo::FormulaPtr formula;  // axioms /\ f[= -> E]
  std::string e_name;      // the fresh equivalence predicate
};

namespace detail {

inline fo::FormulaPtr replace_eq(const fo::FormulaPtr& f, const std::string& e) {
  if (f->get_if<fo::Atom>()) return f;
  if (const auto* n = f->get_if<fo::Eq>()) return fo::atom(e, n->lhs, n->rhs);
  if (const auto* n = f->get_if<fo::Not>()) return fo::not_(replace_eq(n->sub, e));
  if (const auto* n = f->get_if<fo::And>())
    return fo::and_(replace_eq(n->lhs, e), replace_eq(n->rhs, e));
  const auto* n = f->get_if<fo::Exists>();
  return fo::exists(n->bound, replace_eq(n->sub, e));
}

}  // namespace detail

// Equality elimination for FO3=: every x = y becomes E(x, y), conjoined with
// the axioms making E an equivalence relation and, per predicate, the two
// three-variable congruence laws. The axioms reuse the formula's own variable
// names (padded to three) so the output stays within three variables. The
// translation preserves satisfiability in both directions: a model of f
// extends with E := identity, and a model of the output quotients by E.
inline EqualityElimResult eliminate_equality(const fo::FormulaPtr& f) {
  if (!fo::is_fok(f, 3)) throw SemanticError("equality elimination expects at most 3 variables");

  std::set<fo::Var> used = fo::vars_of(f);
  std::vector<fo::Var> pool(used.begin(), used.end());
  for (const char* candidate : {"x", "y", "z", "v", "w"}) {
    if (pool.size() >= 3) break;
    const fo::Var v{candidate};
    if (!used.count(v)) {
      pool.push_back(v);
      used.insert(v);
    }
  }
  while (pool.size() < 3) {
    const fo::Var v = fo::fresh_var("v", used);
    pool.push_back(v);
    used.insert(v);
  }
  const fo::Var a = pool[0], b = pool[1], c = pool[2];

  const auto preds = fo::predicates_of(f);
  std::string e = "e";
  for (int i = 1; preds.count(e); ++i) e = "e_" + std::to_string(i);

  auto eat = [&](const fo::Var& s, const fo::Var& t) { return fo::atom(e, s, t); };

  std::vector<fo::FormulaPtr> axioms;
  axioms.push_back(fo::forall(a, eat(a, a)));
  axioms.push_back(fo::forall(a, fo::forall(b, fo::implies(eat(a, b), eat(b, a)))));
  axioms.push_back(fo::forall(
      a, fo::forall(b, fo::forall(c, fo::implies(fo::and_(eat(a, b), eat(b, c)), eat(a, c))))));
  for (const auto& p : preds) {
    axioms.push_back(fo::forall(
        a, fo::forall(b, fo::forall(c, fo::implies(eat(a, b),
                                                   fo::iff(fo::atom(p, a, c), fo::atom(p, b, c)))))));
    axioms.push_back(fo::forall(
        a, fo::forall(b, fo::forall(c, fo::implies(eat(b, c),
                                                   fo::iff(fo::atom(p, a, b), fo::atom(p, a, c)))))));
  }

  EqualityElimResult out;
  out.e_name = e;
  out.formula = fo::and_(and_all(std::move(axioms)), detail::replace_eq(f, e));
  return out;
}

}  // namespace relcalc::trans

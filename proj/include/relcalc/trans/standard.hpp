#pragma once

#include "relcalc/cor/ast.hpp"
#include "relcalc/errors.hpp"
#include "relcalc/fo/ast.hpp"

namespace relcalc::trans {

// Variable pool of the standard translation: the two free variables x1, x2
// plus the recycled third variable z.
inline const fo::Var& st_x1() {
  static const fo::Var v{"x1"};
  return v;
}
inline const fo::Var& st_x2() {
  static const fo::Var v{"x2"};
  return v;
}
inline const fo::Var& st_z() {
  static const fo::Var v{"z"};
  return v;
}

namespace detail {

inline const fo::Var& st_third(const fo::Var& a, const fo::Var& b) {
  for (const fo::Var* v : {&st_x1(), &st_x2(), &st_z()})
    if (!(*v == a) && !(*v == b)) return *v;
  throw SemanticError("standard translation pool exhausted");
}

inline fo::FormulaPtr st(const cor::TermPtr& t, const fo::Var& x, const fo::Var& y) {
  if (const auto* n = t->get_if<cor::RelVar>()) return fo::atom(n->name, x, y);
  if (t->get_if<cor::Id>()) return fo::eq(x, y);
  if (const auto* n = t->get_if<cor::Comp>()) return fo::not_(st(n->sub, x, y));
  if (const auto* n = t->get_if<cor::Inter>()) return fo::and_(st(n->lhs, x, y), st(n->rhs, x, y));
  if (const auto* n = t->get_if<cor::Dot>()) {
    const fo::Var& w = st_third(x, y);
    return fo::exists(w, fo::and_(st(n->lhs, x, w), st(n->rhs, w, y)));
  }
  return st(t->get_if<cor::Conv>()->sub, y, x);
}

}  // namespace detail

// Standard translation of a CoR term into an FO3= formula with free variables
// x1, x2, semantically equivalent w.r.t. binary relations: the denotation of
// the term equals the (x1, x2)-projection of the formula's denotation.
inline fo::FormulaPtr standard_translation(const cor::TermPtr& t) {
  return detail::st(t, st_x1(), st_x2());
}

}  // namespace relcalc::trans

#pragma once

#include "relcalc/cor/ast.hpp"
#include "relcalc/errors.hpp"
#include "relcalc/model/structure.hpp"

namespace relcalc::sem {

// Denotation of a CoR term on a finite structure, by structural recursion.
// Missing relation symbols are an error unless missing_as_empty is set, in
// which case they denote the empty relation.
inline model::Relation eval_term(const model::Structure& m, const cor::TermPtr& t,
                                 bool missing_as_empty = false) {
  if (const auto* n = t->get_if<cor::RelVar>()) {
    if (!m.has(n->name)) {
      if (missing_as_empty) return model::Relation(m.universe);
      throw SemanticError("relation symbol '" + n->name + "' is not interpreted");
    }
    return m.at(n->name);
  }
  if (t->get_if<cor::Id>()) return model::Relation::identity(m.universe);
  if (const auto* n = t->get_if<cor::Comp>())
    return eval_term(m, n->sub, missing_as_empty).complemented();
  if (const auto* n = t->get_if<cor::Inter>())
    return eval_term(m, n->lhs, missing_as_empty).intersect(eval_term(m, n->rhs, missing_as_empty));
  if (const auto* n = t->get_if<cor::Dot>())
    return eval_term(m, n->lhs, missing_as_empty).compose(eval_term(m, n->rhs, missing_as_empty));
  return eval_term(m, t->get_if<cor::Conv>()->sub, missing_as_empty).converse();
}

inline bool holds_qf(const model::Structure& m, const cor::QfPtr& f,
                     bool missing_as_empty = false) {
  if (const auto* n = f->get_if<cor::Equation>())
    return eval_term(m, n->lhs, missing_as_empty) == eval_term(m, n->rhs, missing_as_empty);
  if (const auto* n = f->get_if<cor::QfNot>()) return !holds_qf(m, n->sub, missing_as_empty);
  const auto* n = f->get_if<cor::QfAnd>();
  return holds_qf(m, n->lhs, missing_as_empty) && holds_qf(m, n->rhs, missing_as_empty);
}

}  // namespace relcalc::sem

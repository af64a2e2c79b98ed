#pragma once

#include "relcalc/cor/ast.hpp"

namespace relcalc::trans {

// Schroder-Tarski translation: a term t with f <-> (t = top), in two passes
// exactly as the classical proof. Equations t = s become
// ((t & s) | (t^c & s^c)) = top, then negation turns into top ; _^c ; top and
// conjunction into intersection.
inline cor::TermPtr schroder_tarski(const cor::QfPtr& f) {
  if (const auto* n = f->get_if<cor::Equation>())
    return cor::union_(cor::inter(n->lhs, n->rhs),
                       cor::inter(cor::comp(n->lhs), cor::comp(n->rhs)));
  if (const auto* n = f->get_if<cor::QfNot>())
    return cor::dot(cor::dot(cor::top(), cor::comp(schroder_tarski(n->sub))), cor::top());
  const auto* n = f->get_if<cor::QfAnd>();
  return cor::inter(schroder_tarski(n->lhs), schroder_tarski(n->rhs));
}

}  // namespace relcalc::trans

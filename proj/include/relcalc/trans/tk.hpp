#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "relcalc/cor/ast.hpp"
#include "relcalc/errors.hpp"
#include "relcalc/fo/ast.hpp"
#include "relcalc/model/ktuple.hpp"
#include "relcalc/trans/fold.hpp"
#include "relcalc/trans/gamma.hpp"
#include "relcalc/trans/schroder.hpp"

namespace relcalc::trans {

// Indexing of a source formula's variables as x_1..x_k, assigned in order of
// first occurrence; k is padded up to a minimum when the formula has fewer
// variables.
struct TranslationUnit {
  int k = 1;
  std::map<fo::Var, int> var_index;  // injective into 1..k
  std::set<std::string> sigma_used;

  int index_of(const fo::Var& v) const {
    auto it = var_index.find(v);
    if (it == var_index.end())
      throw SemanticError("variable " + v.name + " is not in the translation unit");
    return it->second;
  }
};

inline TranslationUnit make_unit(const fo::FormulaPtr& f, int min_k) {
  TranslationUnit unit;
  const auto order = fo::vars_in_first_occurrence_order(f);
  unit.k = std::max(min_k, static_cast<int>(order.size()));
  for (size_t i = 0; i < order.size(); ++i) unit.var_index.emplace(order[i], static_cast<int>(i) + 1);
  unit.sigma_used = fo::predicates_of(f);
  return unit;
}

// T^(k): the term translation over k-tuple structures. Every clause
// intersects with id so the denotation stays inside the diagonal, which is
// the invariant the pointwise correspondence lives on. (The atom, equality
// and quantifier clauses carry the intersection anyway; the negation clause
// needs it because complementation escapes the diagonal otherwise.)
inline cor::TermPtr t_k(const fo::FormulaPtr& f, const TranslationUnit& unit) {
  auto pi = [](int i) { return cor::rel(model::pi_name(i)); };
  auto q = [](int i) { return cor::rel(model::q_name(i)); };
  if (const auto* n = f->get_if<fo::Atom>()) {
    const int i = unit.index_of(n->lhs), j = unit.index_of(n->rhs);
    return cor::inter(cor::dot(cor::dot(pi(i), cor::rel(n->pred)), cor::conv(pi(j))), cor::id());
  }
  if (const auto* n = f->get_if<fo::Eq>()) {
    const int i = unit.index_of(n->lhs), j = unit.index_of(n->rhs);
    return cor::inter(cor::dot(pi(i), cor::conv(pi(j))), cor::id());
  }
  if (const auto* n = f->get_if<fo::Not>())
    return cor::inter(cor::comp(t_k(n->sub, unit)), cor::id());
  if (const auto* n = f->get_if<fo::And>())
    return cor::inter(t_k(n->lhs, unit), t_k(n->rhs, unit));
  const auto* n = f->get_if<fo::Exists>();
  const int i = unit.index_of(n->bound);
  return cor::inter(cor::dot(cor::dot(q(i), t_k(n->sub, unit)), cor::conv(q(i))), cor::id());
}

// (/\ Gamma^(k)) -> T^(k)(f) >= id. Free variables are implicitly universal:
// the inequation ranges over every diagonal point, i.e. every assignment.
inline cor::QfPtr fo_to_cor(const fo::FormulaPtr& f) {
  const TranslationUnit unit = make_unit(f, 1);
  auto gamma = gamma_k(unit.k, unit.sigma_used);
  return cor::qf_implies(and_all_qf(std::move(gamma)), cor::leq(cor::id(), t_k(f, unit)));
}

// Same, collapsed to a single equation t = top by the Schroder-Tarski
// translation.
inline cor::QfPtr fo_to_cor_equation(const fo::FormulaPtr& f) {
  return cor::equation(schroder_tarski(fo_to_cor(f)), cor::top());
}

}  // namespace relcalc::trans

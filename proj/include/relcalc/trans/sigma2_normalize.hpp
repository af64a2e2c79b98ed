#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "relcalc/cor/ast.hpp"
#include "relcalc/cor/print.hpp"
#include "relcalc/cor/sigma2.hpp"
#include "relcalc/errors.hpp"
#include "relcalc/trans/fold.hpp"
#include "relcalc/trans/tseitin.hpp"

namespace relcalc::trans {

struct Sigma2Result {
  cor::QfPtr formula;                            // (top ; (U gamma) ; top) | root = top
  std::vector<cor::TermPtr> gamma;               // union members, sorted by printed form
  TseitinEnv env;                                // the underlying Tseitin naming
  std::map<std::string, std::string> comp_name;  // variable -> fresh name for its complement
};

namespace detail {

inline void first_forbidden(const cor::TermPtr& t, std::string& found) {
  if (!found.empty()) return;
  if (t->get_if<cor::Conv>() || t->get_if<cor::Id>()) {
    found = cor::print_term(t);
    return;
  }
  if (const auto* n = t->get_if<cor::Comp>()) {
    first_forbidden(n->sub, found);
  } else if (const auto* n = t->get_if<cor::Inter>()) {
    first_forbidden(n->lhs, found);
    first_forbidden(n->rhs, found);
  } else if (const auto* n = t->get_if<cor::Dot>()) {
    first_forbidden(n->lhs, found);
    first_forbidden(n->rhs, found);
  }
}

}  // namespace detail

// Normalizes an equation t = top (with t free of converse and identity) into
// the second-level form (top ; (U Gamma) ; top) | a_t = top. Each Tseitin
// defining equation u = s contributes its two violation detectors u & s^c and
// u^c & s; complemented variables in positions the templates require to be
// plain are replaced by fresh variables whose defining axiom b^c = c joins
// the same template set. The result is true on a structure exactly when some
// detector is non-empty or a_t is the full relation.
inline Sigma2Result sigma2_normalize(const cor::QfPtr& input) {
  const auto* eq = input->get_if<cor::Equation>();
  if (!eq) throw SemanticError("sigma2 normalization expects an equation");
  if (!cor::is_top(*eq->rhs))
    throw SemanticError("sigma2 normalization expects an equation of the form t = top");
  std::string forbidden;
  detail::first_forbidden(eq->lhs, forbidden);
  if (!forbidden.empty())
    throw SemanticError("input must be free of converse and identity, found: " + forbidden);

  Sigma2Result result;
  result.env = tseitin(eq->lhs);

  std::set<std::string> taken = cor::rel_vars_of(eq->lhs);
  for (const auto& [sub, name] : result.env.names) taken.insert(name);

  auto comp_of = [&](const std::string& v) -> std::string {
    auto it = result.comp_name.find(v);
    if (it != result.comp_name.end()) return it->second;
    std::string base = "n_" + v;
    std::string name = base;
    for (int i = 1; taken.count(name); ++i) name = base + "_" + std::to_string(i);
    taken.insert(name);
    result.comp_name.emplace(v, name);
    return name;
  };

  std::vector<cor::TermPtr> members;
  for (const auto& [sub, u] : result.env.names) {
    const auto uvar = cor::rel(u);
    if (const auto* leaf = sub->get_if<cor::RelVar>()) {
      members.push_back(cor::inter(uvar, cor::rel(comp_of(leaf->name))));
      members.push_back(cor::inter(cor::rel(comp_of(u)), cor::rel(leaf->name)));
    } else if (const auto* c = sub->get_if<cor::Comp>()) {
      const std::string v = result.env.name_of(c->sub);
      members.push_back(cor::inter(uvar, cor::rel(v)));
      members.push_back(cor::inter(cor::comp(uvar), cor::comp(cor::rel(v))));
    } else if (const auto* in = sub->get_if<cor::Inter>()) {
      const std::string v = result.env.name_of(in->lhs);
      const std::string w = result.env.name_of(in->rhs);
      // (a_v & a_w)^c = a_v^c | a_w^c; the union splits into two detectors.
      members.push_back(cor::inter(uvar, cor::rel(comp_of(v))));
      members.push_back(cor::inter(uvar, cor::rel(comp_of(w))));
      members.push_back(cor::inter(cor::rel(comp_of(u)), cor::inter(cor::rel(v), cor::rel(w))));
    } else if (const auto* d = sub->get_if<cor::Dot>()) {
      const std::string v = result.env.name_of(d->lhs);
      const std::string w = result.env.name_of(d->rhs);
      members.push_back(
          cor::inter(uvar, cor::dagger(cor::rel(comp_of(v)), cor::rel(comp_of(w)))));
      members.push_back(cor::inter(cor::rel(comp_of(u)), cor::dot(cor::rel(v), cor::rel(w))));
    } else {
      throw SemanticError("unexpected identity or converse below a checked input");
    }
  }
  for (const auto& [v, nv] : result.comp_name) {
    members.push_back(cor::inter(cor::comp(cor::rel(v)), cor::comp(cor::rel(nv))));
    members.push_back(cor::inter(cor::rel(v), cor::rel(nv)));
  }

  std::sort(members.begin(), members.end(), [](const cor::TermPtr& a, const cor::TermPtr& b) {
    return cor::print_term(a) < cor::print_term(b);
  });
  members.erase(std::unique(members.begin(), members.end(),
                            [](const cor::TermPtr& a, const cor::TermPtr& b) {
                              return cor::struct_eq(a, b);
                            }),
                members.end());
  result.gamma = members;

  const cor::TermPtr middle = union_all(members);
  result.formula = cor::equation(
      cor::union_(cor::dot(cor::dot(cor::top(), middle), cor::top()), cor::rel(result.env.root)),
      cor::top());
  return result;
}

}  // namespace relcalc::trans

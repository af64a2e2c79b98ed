#pragma once

#include <string>
#include <vector>

#include "relcalc/cor/ast.hpp"
#include "relcalc/errors.hpp"
#include "relcalc/fo/ast.hpp"
#include "relcalc/fo/prenex.hpp"
#include "relcalc/trans/fold.hpp"
#include "relcalc/trans/sigma2_normalize.hpp"

namespace relcalc::trans {

struct GodelResult {
  fo::FormulaPtr sentence;  // prenex, prefix exists^3 forall^*
  Sigma2Result sigma2;
};

// Conservative reduction of an equation t = top (converse- and identity-free)
// to a prenex sentence with prefix exists^3 forall^*, only binary predicates
// and no equality; the negation lands in the Goedel class forall^3 exists^*.
// Pipeline: sigma2 normal form, a standard translation of each union member
// (universal variables renamed apart per member so they prenex out, the
// composition variable z shared so the existentials merge), then prenexing in
// the ordering x, y, z, w_1, ..., w_m.
inline GodelResult godel_reduce(const cor::QfPtr& input) {
  GodelResult out;
  out.sigma2 = sigma2_normalize(input);

  const fo::Var x{"x"}, y{"y"}, z{"z"};
  std::vector<fo::Var> w_vars;
  auto fresh_w = [&] {
    fo::Var w{"w" + std::to_string(w_vars.size() + 1)};
    w_vars.push_back(w);
    return w;
  };

  bool used_z = false;
  std::vector<fo::FormulaPtr> disjuncts;
  for (const auto& g : out.sigma2.gamma) {
    const auto* in = g->get_if<cor::Inter>();
    if (!in) throw SemanticError("sigma2 member is not an intersection: " + cor::print_term(g));
    if (const auto* cl = in->lhs->get_if<cor::Comp>()) {
      // b^c & c^c: both pairs missing
      const auto* cr = in->rhs->get_if<cor::Comp>();
      disjuncts.push_back(
          fo::and_(fo::not_(fo::atom(cl->sub->get_if<cor::RelVar>()->name, x, y)),
                   fo::not_(fo::atom(cr->sub->get_if<cor::RelVar>()->name, x, y))));
      continue;
    }
    const std::string b = in->lhs->get_if<cor::RelVar>()->name;
    const fo::FormulaPtr bxy = fo::atom(b, x, y);
    const cor::TermPtr& body = in->rhs;
    if (const auto* v = body->get_if<cor::RelVar>()) {
      disjuncts.push_back(fo::and_(bxy, fo::atom(v->name, x, y)));
    } else if (auto d = as_dagger(*body)) {
      const fo::Var w = fresh_w();
      disjuncts.push_back(fo::and_(
          bxy, fo::forall(w, fo::or_(fo::atom(d->first->get_if<cor::RelVar>()->name, x, w),
                                     fo::atom(d->second->get_if<cor::RelVar>()->name, w, y)))));
    } else if (const auto* dd = body->get_if<cor::Dot>()) {
      used_z = true;
      disjuncts.push_back(fo::and_(
          bxy, fo::exists(z, fo::and_(fo::atom(dd->lhs->get_if<cor::RelVar>()->name, x, z),
                                      fo::atom(dd->rhs->get_if<cor::RelVar>()->name, z, y)))));
    } else if (const auto* ii = body->get_if<cor::Inter>()) {
      disjuncts.push_back(
          fo::and_(bxy, fo::and_(fo::atom(ii->lhs->get_if<cor::RelVar>()->name, x, y),
                                 fo::atom(ii->rhs->get_if<cor::RelVar>()->name, x, y))));
    } else {
      throw SemanticError("sigma2 member matches no template: " + cor::print_term(g));
    }
  }

  // Residual disjunct a = top, kept last as in the worked example.
  const fo::Var wa = fresh_w(), wb = fresh_w();
  disjuncts.push_back(
      fo::forall(wa, fo::forall(wb, fo::atom(out.sigma2.env.root, wa, wb))));

  const fo::FormulaPtr raw = fo::exists(x, fo::exists(y, or_all(std::move(disjuncts))));

  std::vector<fo::Var> order{x, y, z};
  order.insert(order.end(), w_vars.begin(), w_vars.end());
  fo::FormulaPtr pn = fo::prenex(raw, order);

  if (!used_z) {
    // Pad with a vacuous third existential so the prefix is always E3A*.
    auto [prefix, matrix] = fo::split_prefix(pn);
    prefix.insert(prefix.begin() + 2, {fo::Quant::Exists, z});
    pn = fo::build_prefixed(prefix, matrix);
  }
  out.sentence = pn;
  return out;
}

}  // namespace relcalc::trans

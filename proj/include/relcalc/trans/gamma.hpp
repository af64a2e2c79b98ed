#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "relcalc/cor/ast.hpp"
#include "relcalc/cor/print.hpp"
#include "relcalc/errors.hpp"
#include "relcalc/model/ktuple.hpp"
#include "relcalc/trans/fold.hpp"

namespace relcalc::trans {

// The boundary intervals E_[1,0] and E_[k+1,k] are notation for top, never
// materialized relations.
inline cor::TermPtr e_interval(int lo, int hi) {
  if (lo > hi) return cor::top();
  return cor::rel(model::e_name(lo, hi));
}

// The equation set Gamma^(k) characterizing (up to isomorphism) the k-tuple
// structures, instantiated over the relation symbols actually used. Each
// member has constant size except the k-fold intersection defining u, so the
// whole set is O(k + |sigma|).
inline std::vector<cor::QfPtr> gamma_k(int k, const std::set<std::string>& sigma_used) {
  if (k < 1) throw SemanticError("k must be at least 1");
  const auto extras = model::sigma_k_extras(k);
  for (const auto& name : sigma_used)
    if (extras.count(name))
      throw SemanticError("relation name '" + name + "' collides with the k-tuple signature");

  auto u = [] { return cor::rel(model::u_name()); };
  auto pi = [](int i) { return cor::rel(model::pi_name(i)); };
  auto q = [](int i) { return cor::rel(model::q_name(i)); };

  std::vector<cor::QfPtr> eqs;

  std::vector<cor::TermPtr> projections;
  for (int j = 1; j <= k; ++j) projections.push_back(pi(j));
  eqs.push_back(cor::equation(u(), inter_all(std::move(projections))));  // u = cap_j pi_j

  for (int i = 1; i <= k; ++i) {
    const auto pi_pi = cor::dot(pi(i), cor::conv(pi(i)));
    eqs.push_back(cor::equation(e_interval(1, i), cor::inter(e_interval(1, i - 1), pi_pi)));
    eqs.push_back(cor::equation(e_interval(i, k), cor::inter(e_interval(i + 1, k), pi_pi)));
    eqs.push_back(cor::equation(q(i), cor::inter(e_interval(1, i - 1), e_interval(i + 1, k))));
    eqs.push_back(cor::leq(cor::dot(cor::conv(pi(i)), pi(i)), cor::id()));
    eqs.push_back(cor::leq(cor::id(), cor::dot(cor::dot(pi(i), u()), cor::conv(pi(i)))));
    eqs.push_back(cor::leq(cor::dot(cor::top(), u()), cor::dot(q(i), pi(i))));
  }

  eqs.push_back(cor::leq(u(), cor::id()));
  eqs.push_back(cor::equation(cor::id(), e_interval(1, k)));
  eqs.push_back(cor::equation(cor::dot(cor::dot(cor::top(), u()), cor::top()), cor::top()));
  for (const auto& a : sigma_used)
    eqs.push_back(cor::leq(cor::rel(a), cor::dot(cor::dot(u(), cor::top()), u())));

  std::sort(eqs.begin(), eqs.end(), [](const cor::QfPtr& a, const cor::QfPtr& b) {
    return cor::print_qf(a) < cor::print_qf(b);
  });
  eqs.erase(std::unique(eqs.begin(), eqs.end(),
                        [](const cor::QfPtr& a, const cor::QfPtr& b) { return cor::struct_eq(a, b); }),
            eqs.end());
  return eqs;
}

}  // namespace relcalc::trans

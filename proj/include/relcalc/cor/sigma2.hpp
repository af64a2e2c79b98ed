#pragma once

#include <string>
#include <variant>
#include <vector>

#include "relcalc/cor/ast.hpp"
#include "relcalc/cor/print.hpp"

namespace relcalc::cor {

// Decomposition of an equation in the shape (top ; (U Gamma) ; top) | a = top
// with every Gamma member drawn from the five shallow templates
//   b & c,  b^c & c^c,  b & (c # d),  b & (c ; d),  b & (c & d)
// over relation variables.
struct Sigma2Shape {
  std::vector<TermPtr> gamma;
  std::string residual;
};

struct Sigma2Rejection {
  std::string reason;
  std::string offending;  // printed form of the first offending subterm
};

using Sigma2Check = std::variant<Sigma2Shape, Sigma2Rejection>;

namespace detail {

inline bool is_relvar(const TermPtr& t) { return t->get_if<RelVar>() != nullptr; }

inline bool is_comp_of_relvar(const TermPtr& t) {
  const auto* c = t->get_if<Comp>();
  return c && is_relvar(c->sub);
}

inline bool matches_template(const TermPtr& t) {
  const auto* in = t->get_if<Inter>();
  if (!in) return false;
  if (is_comp_of_relvar(in->lhs) && is_comp_of_relvar(in->rhs)) return true;  // b^c & c^c
  if (!is_relvar(in->lhs)) return false;
  const TermPtr& body = in->rhs;
  if (is_relvar(body)) return true;  // b & c
  if (auto d = as_dagger(*body)) return is_relvar(d->first) && is_relvar(d->second);
  if (const auto* dd = body->get_if<Dot>()) return is_relvar(dd->lhs) && is_relvar(dd->rhs);
  if (const auto* ii = body->get_if<Inter>()) return is_relvar(ii->lhs) && is_relvar(ii->rhs);
  return false;
}

inline void flatten_union(const TermPtr& t, std::vector<TermPtr>& out) {
  if (auto u = as_union(*t)) {
    flatten_union(u->first, out);
    flatten_union(u->second, out);
  } else {
    out.push_back(t);
  }
}

}  // namespace detail

inline Sigma2Check check_sigma2(const QfPtr& f) {
  const auto* eq = f->get_if<Equation>();
  if (!eq) return Sigma2Rejection{"not an equation", print_qf(f)};
  if (!is_top(*eq->rhs)) return Sigma2Rejection{"right-hand side is not top", print_term(eq->rhs)};
  auto u = as_union(*eq->lhs);
  if (!u)
    return Sigma2Rejection{"left-hand side is not a union with a residual variable",
                           print_term(eq->lhs)};
  if (!detail::is_relvar(u->second))
    return Sigma2Rejection{"residual is not a relation variable", print_term(u->second)};

  // Peel the fixed skeleton top ; body ; top (composition is left-assoc).
  const auto* outer = u->first->get_if<Dot>();
  if (!outer || !is_top(*outer->rhs))
    return Sigma2Rejection{"missing the top ; _ ; top skeleton", print_term(u->first)};
  const auto* inner = outer->lhs->get_if<Dot>();
  if (!inner || !is_top(*inner->lhs))
    return Sigma2Rejection{"missing the top ; _ ; top skeleton", print_term(outer->lhs)};

  Sigma2Shape shape;
  shape.residual = u->second->get_if<RelVar>()->name;
  detail::flatten_union(inner->rhs, shape.gamma);
  for (const auto& member : shape.gamma)
    if (!detail::matches_template(member))
      return Sigma2Rejection{"union member matches none of the five templates",
                             print_term(member)};
  return shape;
}

}  // namespace relcalc::cor

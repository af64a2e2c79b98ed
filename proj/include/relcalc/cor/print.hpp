#pragma once

#include <string>

#include "relcalc/cor/ast.hpp"

namespace relcalc::cor {

namespace detail {

// Term precedence: | (1) < & (2) < ; # (3, one level, left-assoc) < postfix.
inline void print_term_rec(const Term& t, int min_prec, std::string& out);

inline void print_term_binary(const TermPtr& lhs, const char* op, const TermPtr& rhs, int prec,
                              int min_prec, std::string& out) {
  const bool paren = prec < min_prec;
  if (paren) out += '(';
  print_term_rec(*lhs, prec, out);
  out += ' ';
  out += op;
  out += ' ';
  print_term_rec(*rhs, prec + 1, out);
  if (paren) out += ')';
}

inline void print_term_rec(const Term& t, int min_prec, std::string& out) {
  if (const auto* n = t.get_if<RelVar>()) {
    out += n->name;
    return;
  }
  if (t.get_if<Id>()) {
    out += "id";
    return;
  }
  if (is_bot(t)) {
    out += "bot";
    return;
  }
  if (is_top(t)) {
    out += "top";
    return;
  }
  if (auto u = as_union(t)) {
    print_term_binary(u->first, "|", u->second, 1, min_prec, out);
    return;
  }
  if (auto d = as_dagger(t)) {
    print_term_binary(d->first, "#", d->second, 3, min_prec, out);
    return;
  }
  if (const auto* n = t.get_if<Inter>()) {
    print_term_binary(n->lhs, "&", n->rhs, 2, min_prec, out);
    return;
  }
  if (const auto* n = t.get_if<Dot>()) {
    print_term_binary(n->lhs, ";", n->rhs, 3, min_prec, out);
    return;
  }
  // postfix operators bind tightest; operands below postfix level get parens
  const TermPtr& sub = t.get_if<Comp>() ? t.get_if<Comp>()->sub : t.get_if<Conv>()->sub;
  const bool paren = [&] {
    if (sub->get_if<RelVar>() || sub->get_if<Id>() || is_top(*sub) || is_bot(*sub)) return false;
    if (as_union(*sub) || as_dagger(*sub)) return true;
    return !(sub->get_if<Comp>() || sub->get_if<Conv>());
  }();
  if (paren) out += '(';
  print_term_rec(*sub, paren ? 0 : 4, out);
  if (paren) out += ')';
  out += t.get_if<Comp>() ? "^c" : "^T";
}

// Formula precedence: /\ (1) < ! (2) < equations and parens.
inline void print_qf_rec(const QfFormula& f, int min_prec, std::string& out) {
  if (const auto* n = f.get_if<Equation>()) {
    if (auto l = as_leq(*n)) {
      print_term_rec(*l->first, 0, out);
      out += " <= ";
      print_term_rec(*l->second, 0, out);
    } else {
      print_term_rec(*n->lhs, 0, out);
      out += " = ";
      print_term_rec(*n->rhs, 0, out);
    }
    return;
  }
  if (const auto* n = f.get_if<QfNot>()) {
    out += '!';
    print_qf_rec(*n->sub, 2, out);
    return;
  }
  const auto* n = f.get_if<QfAnd>();
  const bool paren = 1 < min_prec;
  if (paren) out += '(';
  print_qf_rec(*n->lhs, 1, out);
  out += " /\\ ";
  print_qf_rec(*n->rhs, 2, out);
  if (paren) out += ')';
}

}  // namespace detail

inline std::string print_term(const TermPtr& t) {
  std::string out;
  detail::print_term_rec(*t, 0, out);
  return out;
}

inline std::string print_qf(const QfPtr& f) {
  std::string out;
  detail::print_qf_rec(*f, 0, out);
  return out;
}

inline std::string print_cor(const TermPtr& t) { return print_term(t); }
inline std::string print_cor(const QfPtr& f) { return print_qf(f); }

}  // namespace relcalc::cor

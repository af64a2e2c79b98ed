#pragma once

#include <optional>
#include <string>
#include <utility>

#include "relcalc/fo/ast.hpp"

namespace relcalc::fo {

namespace detail {

inline bool is_truth(const Formula& f) {
  const auto* ex = f.get_if<Exists>();
  if (!ex || !(ex->bound == truth_var())) return false;
  const auto* e = ex->sub->get_if<Eq>();
  return e && e->lhs == truth_var() && e->rhs == truth_var();
}

inline bool is_falsity(const Formula& f) {
  const auto* n = f.get_if<Not>();
  return n && is_truth(*n->sub);
}

// forall v, g  desugars to  !exists v, !g
inline std::optional<std::pair<Var, FormulaPtr>> as_forall(const Formula& f) {
  const auto* n = f.get_if<Not>();
  if (!n) return std::nullopt;
  const auto* ex = n->sub->get_if<Exists>();
  if (!ex) return std::nullopt;
  const auto* inner = ex->sub->get_if<Not>();
  if (!inner) return std::nullopt;
  return std::make_pair(ex->bound, inner->sub);
}

// f | g  desugars to  !(!f & !g)
inline std::optional<std::pair<FormulaPtr, FormulaPtr>> as_or(const Formula& f) {
  const auto* n = f.get_if<Not>();
  if (!n) return std::nullopt;
  const auto* a = n->sub->get_if<And>();
  if (!a) return std::nullopt;
  const auto* nl = a->lhs->get_if<Not>();
  const auto* nr = a->rhs->get_if<Not>();
  if (!nl || !nr) return std::nullopt;
  return std::make_pair(nl->sub, nr->sub);
}

// f -> g  desugars to  !f | g, so its left disjunct carries a double negation.
inline std::optional<std::pair<FormulaPtr, FormulaPtr>> as_implies(const Formula& f) {
  auto o = as_or(f);
  if (!o) return std::nullopt;
  const auto* nn = o->first->get_if<Not>();
  if (!nn) return std::nullopt;
  return std::make_pair(nn->sub, o->second);
}

inline std::optional<std::pair<FormulaPtr, FormulaPtr>> as_iff(const Formula& f) {
  const auto* a = f.get_if<And>();
  if (!a) return std::nullopt;
  auto fwd = as_implies(*a->lhs);
  auto bwd = as_implies(*a->rhs);
  if (!fwd || !bwd) return std::nullopt;
  if (!struct_eq(fwd->first, bwd->second) || !struct_eq(fwd->second, bwd->first))
    return std::nullopt;
  return fwd;
}

// Precedence levels: <-> (1) < -> (2) < | (3) < & (4) < ! (5) < atoms (6).
// Quantifiers bind weakest (their scope extends maximally to the right), so
// they are parenthesized whenever more of the enclosing formula follows.
inline void print_rec(const Formula& f, int min_prec, bool right_open, std::string& out);

inline void print_binary(const FormulaPtr& lhs, const char* op, const FormulaPtr& rhs, int prec,
                         bool left_assoc, int min_prec, bool right_open, std::string& out) {
  const bool paren = prec < min_prec;
  if (paren) out += '(';
  const bool inner_open = paren ? false : right_open;
  print_rec(*lhs, left_assoc ? prec : prec + 1, true, out);
  out += ' ';
  out += op;
  out += ' ';
  const int rhs_min = left_assoc ? prec + 1 : prec;
  const bool rhs_quant = rhs->get_if<Exists>() || as_forall(*rhs);
  print_rec(*rhs, rhs_quant ? 0 : rhs_min, inner_open, out);
  if (paren) out += ')';
}

inline void print_quant(const char* kw, const Var& v, const FormulaPtr& body, int min_prec,
                        bool right_open, std::string& out) {
  const bool paren = min_prec > 0 || right_open;
  if (paren) out += '(';
  out += kw;
  out += ' ';
  out += v.name;
  out += ". ";
  print_rec(*body, 0, false, out);
  if (paren) out += ')';
}

inline void print_rec(const Formula& f, int min_prec, bool right_open, std::string& out) {
  if (is_truth(f)) {
    out += "true";
    return;
  }
  if (is_falsity(f)) {
    out += "false";
    return;
  }
  if (auto p = as_iff(f)) {
    print_binary(p->first, "<->", p->second, 1, false, min_prec, right_open, out);
    return;
  }
  if (auto p = as_implies(f)) {
    print_binary(p->first, "->", p->second, 2, false, min_prec, right_open, out);
    return;
  }
  if (auto p = as_or(f)) {
    print_binary(p->first, "|", p->second, 3, true, min_prec, right_open, out);
    return;
  }
  if (auto p = as_forall(f)) {
    print_quant("forall", p->first, p->second, min_prec, right_open, out);
    return;
  }
  if (const auto* n = f.get_if<Atom>()) {
    out += n->pred;
    out += '(';
    out += n->lhs.name;
    out += ',';
    out += n->rhs.name;
    out += ')';
    return;
  }
  if (const auto* n = f.get_if<Eq>()) {
    out += n->lhs.name;
    out += " = ";
    out += n->rhs.name;
    return;
  }
  if (const auto* n = f.get_if<And>()) {
    print_binary(n->lhs, "&", n->rhs, 4, true, min_prec, right_open, out);
    return;
  }
  if (const auto* n = f.get_if<Not>()) {
    out += '!';
    print_rec(*n->sub, 5, right_open, out);
    return;
  }
  const auto* n = f.get_if<Exists>();
  print_quant("exists", n->bound, n->sub, min_prec, right_open, out);
}

}  // namespace detail

inline std::string print_fo(const FormulaPtr& f) {
  std::string out;
  detail::print_rec(*f, 0, false, out);
  return out;
}

}  // namespace relcalc::fo

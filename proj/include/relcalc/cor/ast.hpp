#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace relcalc::cor {

class Term;
using TermPtr = std::shared_ptr<const Term>;

struct RelVar {
  std::string name;
};

struct Id {};

// Complement with respect to the full relation on the universe.
struct Comp {
  TermPtr sub;
};

struct Inter {
  TermPtr lhs;
  TermPtr rhs;
};

// Relational composition.
struct Dot {
  TermPtr lhs;
  TermPtr rhs;
};

struct Conv {
  TermPtr sub;
};

// Immutable CoR term over the six core constructors. Union, dagger, top and
// bottom are derived forms and expand at construction time.
class Term {
 public:
  using Node = std::variant<RelVar, Id, Comp, Inter, Dot, Conv>;

  explicit Term(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&node_);
  }

 private:
  Node node_;
};

inline TermPtr rel(std::string name) { return std::make_shared<Term>(RelVar{std::move(name)}); }
inline TermPtr id() { return std::make_shared<Term>(Id{}); }
inline TermPtr comp(TermPtr t) { return std::make_shared<Term>(Comp{std::move(t)}); }
inline TermPtr inter(TermPtr l, TermPtr r) {
  return std::make_shared<Term>(Inter{std::move(l), std::move(r)});
}
inline TermPtr dot(TermPtr l, TermPtr r) {
  return std::make_shared<Term>(Dot{std::move(l), std::move(r)});
}
inline TermPtr conv(TermPtr t) { return std::make_shared<Term>(Conv{std::move(t)}); }

// Derived operators: t | s = (t^c & s^c)^c, t # s = (t^c ; s^c)^c,
// top = id | id^c, bot = top^c.
inline TermPtr union_(TermPtr l, TermPtr r) { return comp(inter(comp(std::move(l)), comp(std::move(r)))); }
inline TermPtr dagger(TermPtr l, TermPtr r) { return comp(dot(comp(std::move(l)), comp(std::move(r)))); }
inline TermPtr top() { return union_(id(), comp(id())); }
inline TermPtr bot() { return comp(top()); }

inline bool operator==(const Term& a, const Term& b) {
  if (a.node().index() != b.node().index()) return false;
  if (const auto* x = a.get_if<RelVar>()) return x->name == b.get_if<RelVar>()->name;
  if (a.get_if<Id>()) return true;
  if (const auto* x = a.get_if<Comp>()) return *x->sub == *b.get_if<Comp>()->sub;
  if (const auto* x = a.get_if<Inter>()) {
    const auto* y = b.get_if<Inter>();
    return *x->lhs == *y->lhs && *x->rhs == *y->rhs;
  }
  if (const auto* x = a.get_if<Dot>()) {
    const auto* y = b.get_if<Dot>();
    return *x->lhs == *y->lhs && *x->rhs == *y->rhs;
  }
  return *a.get_if<Conv>()->sub == *b.get_if<Conv>()->sub;
}

inline bool struct_eq(const TermPtr& a, const TermPtr& b) {
  return a == b || (a && b && *a == *b);
}

// Pattern recognizers for the derived forms; the printer uses them to
// re-sugar output and the normal-form checker uses them to take terms apart.
inline std::optional<std::pair<TermPtr, TermPtr>> as_union(const Term& t) {
  const auto* c = t.get_if<Comp>();
  if (!c) return std::nullopt;
  const auto* in = c->sub->get_if<Inter>();
  if (!in) return std::nullopt;
  const auto* cl = in->lhs->get_if<Comp>();
  const auto* cr = in->rhs->get_if<Comp>();
  if (!cl || !cr) return std::nullopt;
  return std::make_pair(cl->sub, cr->sub);
}

inline std::optional<std::pair<TermPtr, TermPtr>> as_dagger(const Term& t) {
  const auto* c = t.get_if<Comp>();
  if (!c) return std::nullopt;
  const auto* d = c->sub->get_if<Dot>();
  if (!d) return std::nullopt;
  const auto* cl = d->lhs->get_if<Comp>();
  const auto* cr = d->rhs->get_if<Comp>();
  if (!cl || !cr) return std::nullopt;
  return std::make_pair(cl->sub, cr->sub);
}

inline bool is_top(const Term& t) {
  auto u = as_union(t);
  return u && u->first->get_if<Id>() && u->second->get_if<Comp>() &&
         u->second->get_if<Comp>()->sub->get_if<Id>();
}

inline bool is_bot(const Term& t) {
  const auto* c = t.get_if<Comp>();
  return c && is_top(*c->sub);
}

// Size measure: variables and id cost 1, every operator costs 1 plus its
// operands. Derived operators are measured after expansion.
inline long long size_term(const TermPtr& t) {
  if (t->get_if<RelVar>() || t->get_if<Id>()) return 1;
  if (const auto* n = t->get_if<Comp>()) return 1 + size_term(n->sub);
  if (const auto* n = t->get_if<Inter>()) return 1 + size_term(n->lhs) + size_term(n->rhs);
  if (const auto* n = t->get_if<Dot>()) return 1 + size_term(n->lhs) + size_term(n->rhs);
  return 1 + size_term(t->get_if<Conv>()->sub);
}

inline void rel_vars_of(const TermPtr& t, std::set<std::string>& out) {
  if (const auto* n = t->get_if<RelVar>()) {
    out.insert(n->name);
  } else if (const auto* n = t->get_if<Comp>()) {
    rel_vars_of(n->sub, out);
  } else if (const auto* n = t->get_if<Inter>()) {
    rel_vars_of(n->lhs, out);
    rel_vars_of(n->rhs, out);
  } else if (const auto* n = t->get_if<Dot>()) {
    rel_vars_of(n->lhs, out);
    rel_vars_of(n->rhs, out);
  } else if (const auto* n = t->get_if<Conv>()) {
    rel_vars_of(n->sub, out);
  }
}

inline std::set<std::string> rel_vars_of(const TermPtr& t) {
  std::set<std::string> out;
  rel_vars_of(t, out);
  return out;
}

inline bool contains_conv(const TermPtr& t) {
  if (t->get_if<Conv>()) return true;
  if (const auto* n = t->get_if<Comp>()) return contains_conv(n->sub);
  if (const auto* n = t->get_if<Inter>()) return contains_conv(n->lhs) || contains_conv(n->rhs);
  if (const auto* n = t->get_if<Dot>()) return contains_conv(n->lhs) || contains_conv(n->rhs);
  return false;
}

inline bool contains_id(const TermPtr& t) {
  if (t->get_if<Id>()) return true;
  if (const auto* n = t->get_if<Comp>()) return contains_id(n->sub);
  if (const auto* n = t->get_if<Inter>()) return contains_id(n->lhs) || contains_id(n->rhs);
  if (const auto* n = t->get_if<Dot>()) return contains_id(n->lhs) || contains_id(n->rhs);
  if (const auto* n = t->get_if<Conv>()) return contains_id(n->sub);
  return false;
}

// ---------------------------------------------------------------------------
// Quantifier-free formulas over terms.

class QfFormula;
using QfPtr = std::shared_ptr<const QfFormula>;

struct Equation {
  TermPtr lhs;
  TermPtr rhs;
};

struct QfNot {
  QfPtr sub;
};

struct QfAnd {
  QfPtr lhs;
  QfPtr rhs;
};

class QfFormula {
 public:
  using Node = std::variant<Equation, QfNot, QfAnd>;

  explicit QfFormula(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&node_);
  }

 private:
  Node node_;
};

inline QfPtr equation(TermPtr l, TermPtr r) {
  return std::make_shared<QfFormula>(Equation{std::move(l), std::move(r)});
}
inline QfPtr qf_not(QfPtr f) { return std::make_shared<QfFormula>(QfNot{std::move(f)}); }
inline QfPtr qf_and(QfPtr l, QfPtr r) {
  return std::make_shared<QfFormula>(QfAnd{std::move(l), std::move(r)});
}

// t <= s abbreviates the equation t | s = s.
inline QfPtr leq(TermPtr l, TermPtr r) { return equation(union_(std::move(l), r), r); }

inline QfPtr qf_or(QfPtr l, QfPtr r) {
  return qf_not(qf_and(qf_not(std::move(l)), qf_not(std::move(r))));
}

inline QfPtr qf_implies(QfPtr l, QfPtr r) { return qf_or(qf_not(std::move(l)), std::move(r)); }

inline std::optional<std::pair<TermPtr, TermPtr>> as_leq(const Equation& e) {
  auto u = as_union(*e.lhs);
  if (u && struct_eq(u->second, e.rhs)) return std::make_pair(u->first, e.rhs);
  return std::nullopt;
}

inline bool operator==(const QfFormula& a, const QfFormula& b) {
  if (a.node().index() != b.node().index()) return false;
  if (const auto* x = a.get_if<Equation>()) {
    const auto* y = b.get_if<Equation>();
    return *x->lhs == *y->lhs && *x->rhs == *y->rhs;
  }
  if (const auto* x = a.get_if<QfNot>()) return *x->sub == *b.get_if<QfNot>()->sub;
  const auto* x = a.get_if<QfAnd>();
  const auto* y = b.get_if<QfAnd>();
  return *x->lhs == *y->lhs && *x->rhs == *y->rhs;
}

inline bool struct_eq(const QfPtr& a, const QfPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline long long size_qf(const QfPtr& f) {
  if (const auto* n = f->get_if<Equation>()) return 1 + size_term(n->lhs) + size_term(n->rhs);
  if (const auto* n = f->get_if<QfNot>()) return 1 + size_qf(n->sub);
  const auto* n = f->get_if<QfAnd>();
  return 1 + size_qf(n->lhs) + size_qf(n->rhs);
}

inline std::set<std::string> rel_vars_of(const QfPtr& f) {
  std::set<std::string> out;
  if (const auto* n = f->get_if<Equation>()) {
    rel_vars_of(n->lhs, out);
    rel_vars_of(n->rhs, out);
  } else if (const auto* n = f->get_if<QfNot>()) {
    out = rel_vars_of(n->sub);
  } else {
    const auto* qa = f->get_if<QfAnd>();
    out = rel_vars_of(qa->lhs);
    auto r = rel_vars_of(qa->rhs);
    out.insert(r.begin(), r.end());
  }
  return out;
}

}  // namespace relcalc::cor

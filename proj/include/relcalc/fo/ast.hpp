#pragma once

#include <algorithm>
#include <compare>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace relcalc::fo {

// A variable. Names compare by exact string equality; the total order used
// wherever one is needed is lexicographic on the name.
struct Var {
  std::string name;

  friend auto operator<=>(const Var&, const Var&) = default;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Atom {
  std::string pred;
  Var lhs;
  Var rhs;
};

struct Eq {
  Var lhs;
  Var rhs;
};

struct Not {
  FormulaPtr sub;
};

struct And {
  FormulaPtr lhs;
  FormulaPtr rhs;
};

struct Exists {
  Var bound;
  FormulaPtr sub;
};

// Immutable FO= syntax tree. Only the five core constructors exist; all the
// usual abbreviations (or, implies, iff, forall, true, false) desugar to
// these at construction time.
class Formula {
 public:
  using Node = std::variant<Atom, Eq, Not, And, Exists>;

  explicit Formula(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&node_);
  }

 private:
  Node node_;
};

inline FormulaPtr atom(std::string pred, Var lhs, Var rhs) {
  return std::make_shared<Formula>(Atom{std::move(pred), std::move(lhs), std::move(rhs)});
}

inline FormulaPtr eq(Var lhs, Var rhs) {
  return std::make_shared<Formula>(Eq{std::move(lhs), std::move(rhs)});
}

inline FormulaPtr not_(FormulaPtr sub) { return std::make_shared<Formula>(Not{std::move(sub)}); }

inline FormulaPtr and_(FormulaPtr lhs, FormulaPtr rhs) {
  return std::make_shared<Formula>(And{std::move(lhs), std::move(rhs)});
}

inline FormulaPtr exists(Var bound, FormulaPtr sub) {
  return std::make_shared<Formula>(Exists{std::move(bound), std::move(sub)});
}

// Abbreviations, expanded eagerly.
inline FormulaPtr or_(FormulaPtr lhs, FormulaPtr rhs) {
  return not_(and_(not_(std::move(lhs)), not_(std::move(rhs))));
}

inline FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs) {
  return or_(not_(std::move(lhs)), std::move(rhs));
}

inline FormulaPtr iff(FormulaPtr lhs, FormulaPtr rhs) {
  return and_(implies(lhs, rhs), implies(rhs, lhs));
}

inline FormulaPtr forall(Var bound, FormulaPtr sub) {
  return not_(exists(std::move(bound), not_(std::move(sub))));
}

// The variable of "true". Reserved: it cannot be written in the concrete
// grammar (identifiers start with a lowercase letter), so it never collides
// with user variables.
inline const Var& truth_var() {
  static const Var v{"_t"};
  return v;
}

inline FormulaPtr truth() { return exists(truth_var(), eq(truth_var(), truth_var())); }

inline FormulaPtr falsity() { return not_(truth()); }

inline bool operator==(const Formula& a, const Formula& b) {
  if (a.node().index() != b.node().index()) return false;
  if (const auto* x = a.get_if<Atom>()) {
    const auto* y = b.get_if<Atom>();
    return x->pred == y->pred && x->lhs == y->lhs && x->rhs == y->rhs;
  }
  if (const auto* x = a.get_if<Eq>()) {
    const auto* y = b.get_if<Eq>();
    return x->lhs == y->lhs && x->rhs == y->rhs;
  }
  if (const auto* x = a.get_if<Not>()) return *x->sub == *b.get_if<Not>()->sub;
  if (const auto* x = a.get_if<And>()) {
    const auto* y = b.get_if<And>();
    return *x->lhs == *y->lhs && *x->rhs == *y->rhs;
  }
  const auto* x = a.get_if<Exists>();
  const auto* y = b.get_if<Exists>();
  return x->bound == y->bound && *x->sub == *y->sub;
}

inline bool struct_eq(const FormulaPtr& a, const FormulaPtr& b) {
  return a == b || (a && b && *a == *b);
}

// Size measure: atoms and equalities cost 3, negation 1 more than the body,
// conjunction 1 more than both bodies, quantification 2 more than the body.
// Abbreviations are measured after desugaring.
inline long long size_fo(const FormulaPtr& f) {
  if (const auto* n = f->get_if<Atom>()) {
    (void)n;
    return 3;
  }
  if (f->get_if<Eq>()) return 3;
  if (const auto* n = f->get_if<Not>()) return 1 + size_fo(n->sub);
  if (const auto* n = f->get_if<And>()) return 1 + size_fo(n->lhs) + size_fo(n->rhs);
  const auto* n = f->get_if<Exists>();
  return 2 + size_fo(n->sub);
}

namespace detail {
inline void collect_vars(const FormulaPtr& f, std::set<Var>& out) {
  if (const auto* n = f->get_if<Atom>()) {
    out.insert(n->lhs);
    out.insert(n->rhs);
  } else if (const auto* n = f->get_if<Eq>()) {
    out.insert(n->lhs);
    out.insert(n->rhs);
  } else if (const auto* n = f->get_if<Not>()) {
    collect_vars(n->sub, out);
  } else if (const auto* n = f->get_if<And>()) {
    collect_vars(n->lhs, out);
    collect_vars(n->rhs, out);
  } else {
    const auto* ex = f->get_if<Exists>();
    out.insert(ex->bound);
    collect_vars(ex->sub, out);
  }
}

inline void collect_free(const FormulaPtr& f, std::set<Var>& bound, std::set<Var>& out) {
  if (const auto* n = f->get_if<Atom>()) {
    if (!bound.count(n->lhs)) out.insert(n->lhs);
    if (!bound.count(n->rhs)) out.insert(n->rhs);
  } else if (const auto* n = f->get_if<Eq>()) {
    if (!bound.count(n->lhs)) out.insert(n->lhs);
    if (!bound.count(n->rhs)) out.insert(n->rhs);
  } else if (const auto* n = f->get_if<Not>()) {
    collect_free(n->sub, bound, out);
  } else if (const auto* n = f->get_if<And>()) {
    collect_free(n->lhs, bound, out);
    collect_free(n->rhs, bound, out);
  } else {
    const auto* ex = f->get_if<Exists>();
    const bool fresh = bound.insert(ex->bound).second;
    collect_free(ex->sub, bound, out);
    if (fresh) bound.erase(ex->bound);
  }
}

inline void collect_first_occurrence(const FormulaPtr& f, std::vector<Var>& order,
                                     std::set<Var>& seen) {
  auto push = [&](const Var& v) {
    if (seen.insert(v).second) order.push_back(v);
  };
  if (const auto* n = f->get_if<Atom>()) {
    push(n->lhs);
    push(n->rhs);
  } else if (const auto* n = f->get_if<Eq>()) {
    push(n->lhs);
    push(n->rhs);
  } else if (const auto* n = f->get_if<Not>()) {
    collect_first_occurrence(n->sub, order, seen);
  } else if (const auto* n = f->get_if<And>()) {
    collect_first_occurrence(n->lhs, order, seen);
    collect_first_occurrence(n->rhs, order, seen);
  } else {
    const auto* ex = f->get_if<Exists>();
    push(ex->bound);
    collect_first_occurrence(ex->sub, order, seen);
  }
}

inline void collect_preds(const FormulaPtr& f, std::set<std::string>& out) {
  if (const auto* n = f->get_if<Atom>()) {
    out.insert(n->pred);
  } else if (const auto* n = f->get_if<Not>()) {
    collect_preds(n->sub, out);
  } else if (const auto* n = f->get_if<And>()) {
    collect_preds(n->lhs, out);
    collect_preds(n->rhs, out);
  } else if (const auto* n = f->get_if<Exists>()) {
    collect_preds(n->sub, out);
  }
}
}  // namespace detail

// All variables, free or bound.
inline std::set<Var> vars_of(const FormulaPtr& f) {
  std::set<Var> out;
  detail::collect_vars(f, out);
  return out;
}

inline std::set<Var> free_vars_of(const FormulaPtr& f) {
  std::set<Var> bound, out;
  detail::collect_free(f, bound, out);
  return out;
}

inline bool is_sentence(const FormulaPtr& f) { return free_vars_of(f).empty(); }

// Membership in FOk=: at most k variables occur, free or bound.
inline bool is_fok(const FormulaPtr& f, int k) {
  return static_cast<int>(vars_of(f).size()) <= k;
}

// Variables in order of first occurrence in a pre-order walk. Used to assign
// the indices x_1..x_k of a translation unit deterministically.
inline std::vector<Var> vars_in_first_occurrence_order(const FormulaPtr& f) {
  std::vector<Var> order;
  std::set<Var> seen;
  detail::collect_first_occurrence(f, order, seen);
  return order;
}

inline std::set<std::string> predicates_of(const FormulaPtr& f) {
  std::set<std::string> out;
  detail::collect_preds(f, out);
  return out;
}

inline bool uses_equality(const FormulaPtr& f) {
  if (f->get_if<Eq>()) return true;
  if (f->get_if<Atom>()) return false;
  if (const auto* n = f->get_if<Not>()) return uses_equality(n->sub);
  if (const auto* n = f->get_if<And>()) return uses_equality(n->lhs) || uses_equality(n->rhs);
  return uses_equality(f->get_if<Exists>()->sub);
}

// Capture-avoiding substitution of a variable by a variable.
inline FormulaPtr rename_var(const FormulaPtr& f, const Var& from, const Var& to) {
  auto sub = [&](const Var& v) { return v == from ? to : v; };
  if (const auto* n = f->get_if<Atom>()) return atom(n->pred, sub(n->lhs), sub(n->rhs));
  if (const auto* n = f->get_if<Eq>()) return eq(sub(n->lhs), sub(n->rhs));
  if (const auto* n = f->get_if<Not>()) return not_(rename_var(n->sub, from, to));
  if (const auto* n = f->get_if<And>())
    return and_(rename_var(n->lhs, from, to), rename_var(n->rhs, from, to));
  const auto* n = f->get_if<Exists>();
  if (n->bound == from) return f;  // occurrence is shadowed below this binder
  return exists(n->bound, rename_var(n->sub, from, to));
}

// Deterministic fresh name: base, then base_1, base_2, ...
inline Var fresh_var(const std::string& base, const std::set<Var>& avoid) {
  Var v{base};
  for (int i = 1; avoid.count(v); ++i) v.name = base + "_" + std::to_string(i);
  return v;
}

}  // namespace relcalc::fo

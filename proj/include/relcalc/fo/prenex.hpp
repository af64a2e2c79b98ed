#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "relcalc/errors.hpp"
#include "relcalc/fo/ast.hpp"

namespace relcalc::fo {

enum class Quant { Exists, Forall };

using Prefix = std::vector<std::pair<Quant, Var>>;

// Quantifier prefix plus the vocabulary of the matrix, read off a sentence in
// prenex form.
struct PrefixClass {
  Prefix prefix;
  int max_predicate_arity = 0;  // 0 when the matrix has no atoms, else 2
  bool uses_equality = false;
  bool uses_functions = false;  // the core grammar has no function symbols

  // Compressed pattern, e.g. "E3A4" for exists^3 forall^4.
  std::string pattern() const {
    std::string out;
    size_t i = 0;
    while (i < prefix.size()) {
      size_t j = i;
      while (j < prefix.size() && prefix[j].first == prefix[i].first) ++j;
      out += prefix[i].first == Quant::Exists ? 'E' : 'A';
      out += std::to_string(j - i);
      i = j;
    }
    return out;
  }
};

namespace detail {
inline bool quantifier_free(const FormulaPtr& f) {
  if (f->get_if<Atom>() || f->get_if<Eq>()) return true;
  if (const auto* n = f->get_if<Not>()) return quantifier_free(n->sub);
  if (const auto* n = f->get_if<And>()) return quantifier_free(n->lhs) && quantifier_free(n->rhs);
  return false;
}
}  // namespace detail

// Splits a prenex sentence into its quantifier prefix and matrix. Universal
// quantifiers are recognized through their core encoding !exists v. !g;
// leading double negations collapse along the way.
inline std::pair<Prefix, FormulaPtr> split_prefix(const FormulaPtr& f) {
  Prefix prefix;
  FormulaPtr cur = f;
  for (;;) {
    if (const auto* ex = cur->get_if<Exists>()) {
      prefix.emplace_back(Quant::Exists, ex->bound);
      cur = ex->sub;
      continue;
    }
    if (const auto* n = cur->get_if<Not>()) {
      if (const auto* ex = n->sub->get_if<Exists>()) {
        prefix.emplace_back(Quant::Forall, ex->bound);
        cur = not_(ex->sub);
        continue;
      }
      if (const auto* nn = n->sub->get_if<Not>()) {
        cur = nn->sub;
        continue;
      }
    }
    break;
  }
  if (!detail::quantifier_free(cur))
    throw SemanticError("formula is not in prenex form: quantifier below the matrix");
  return {std::move(prefix), cur};
}

inline FormulaPtr build_prefixed(const Prefix& prefix, FormulaPtr matrix) {
  FormulaPtr out = std::move(matrix);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    out = it->first == Quant::Exists ? exists(it->second, out) : forall(it->second, out);
  return out;
}

inline PrefixClass classify_prefix(const FormulaPtr& f) {
  auto [prefix, matrix] = split_prefix(f);
  PrefixClass pc;
  pc.prefix = std::move(prefix);
  pc.uses_equality = uses_equality(matrix);
  pc.max_predicate_arity = predicates_of(matrix).empty() ? 0 : 2;
  return pc;
}

// Dual prefix over the negated matrix; semantically the negation of f.
inline FormulaPtr negate_prenex(const FormulaPtr& f) {
  auto [prefix, matrix] = split_prefix(f);
  for (auto& [q, v] : prefix) q = q == Quant::Exists ? Quant::Forall : Quant::Exists;
  return build_prefixed(prefix, not_(matrix));
}

// Membership in the prefix-vocabulary class with `leading` quantifiers first:
// at most three leading quantifiers of that kind, then only the dual kind,
// only binary predicates, no equality, no functions. Shorter leading blocks
// count as members since dummy quantifiers pad them.
inline bool in_godel_class(const PrefixClass& pc, Quant leading) {
  size_t i = 0;
  while (i < pc.prefix.size() && pc.prefix[i].first == leading) ++i;
  if (i > 3) return false;
  for (size_t j = i; j < pc.prefix.size(); ++j)
    if (pc.prefix[j].first == leading) return false;
  return !pc.uses_equality && !pc.uses_functions && pc.max_predicate_arity <= 2;
}

// ---------------------------------------------------------------------------
// Prenex normal form.

namespace detail {

struct NnfNode;
using NnfPtr = std::shared_ptr<NnfNode>;

struct NnfNode {
  enum Kind { Lit, NAnd, NOr, NExists, NForall } kind;
  FormulaPtr lit;  // Kind::Lit only
  Var bound;       // quantifier kinds only
  NnfPtr a, b;     // children; quantifiers use a
};

inline NnfPtr nnf_lit(FormulaPtr f) {
  auto n = std::make_shared<NnfNode>();
  n->kind = NnfNode::Lit;
  n->lit = std::move(f);
  return n;
}

inline NnfPtr nnf_bin(NnfNode::Kind k, NnfPtr a, NnfPtr b) {
  auto n = std::make_shared<NnfNode>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

inline NnfPtr nnf_quant(NnfNode::Kind k, Var v, NnfPtr a) {
  auto n = std::make_shared<NnfNode>();
  n->kind = k;
  n->bound = std::move(v);
  n->a = std::move(a);
  return n;
}

inline NnfPtr to_nnf(const FormulaPtr& f, bool positive) {
  if (f->get_if<Atom>() || f->get_if<Eq>()) return nnf_lit(positive ? f : not_(f));
  if (const auto* n = f->get_if<Not>()) return to_nnf(n->sub, !positive);
  if (const auto* n = f->get_if<And>())
    return nnf_bin(positive ? NnfNode::NAnd : NnfNode::NOr, to_nnf(n->lhs, positive),
                   to_nnf(n->rhs, positive));
  const auto* ex = f->get_if<Exists>();
  return nnf_quant(positive ? NnfNode::NExists : NnfNode::NForall, ex->bound,
                   to_nnf(ex->sub, positive));
}

inline NnfPtr nnf_rename(const NnfPtr& n, const Var& from, const Var& to) {
  switch (n->kind) {
    case NnfNode::Lit:
      return nnf_lit(rename_var(n->lit, from, to));
    case NnfNode::NAnd:
    case NnfNode::NOr:
      return nnf_bin(n->kind, nnf_rename(n->a, from, to), nnf_rename(n->b, from, to));
    default:
      if (n->bound == from) return n;  // shadowed below
      return nnf_quant(n->kind, n->bound, nnf_rename(n->a, from, to));
  }
}

inline FormulaPtr nnf_to_core(const NnfPtr& n) {
  switch (n->kind) {
    case NnfNode::Lit:
      return n->lit;
    case NnfNode::NAnd:
      return and_(nnf_to_core(n->a), nnf_to_core(n->b));
    case NnfNode::NOr:
      return or_(nnf_to_core(n->a), nnf_to_core(n->b));
    default:
      throw SemanticError("quantifier left inside a prenex matrix");
  }
}

// Renames shadowing re-quantifications apart; quantifiers in parallel
// branches keep their names so they can merge during pulling.
inline FormulaPtr rename_shadowed(const FormulaPtr& f, std::set<Var>& in_scope,
                                  std::set<Var>& all_names) {
  if (f->get_if<Atom>() || f->get_if<Eq>()) return f;
  if (const auto* n = f->get_if<Not>()) return not_(rename_shadowed(n->sub, in_scope, all_names));
  if (const auto* n = f->get_if<And>()) {
    auto l = rename_shadowed(n->lhs, in_scope, all_names);
    auto r = rename_shadowed(n->rhs, in_scope, all_names);
    return and_(l, r);
  }
  const auto* ex = f->get_if<Exists>();
  Var v = ex->bound;
  FormulaPtr body = ex->sub;
  if (in_scope.count(v)) {
    const Var fresh = fresh_var(v.name, all_names);
    all_names.insert(fresh);
    body = rename_var(body, v, fresh);
    v = fresh;
  }
  in_scope.insert(v);
  FormulaPtr out = exists(v, rename_shadowed(body, in_scope, all_names));
  in_scope.erase(v);
  return out;
}

struct Pulled {
  Prefix prefix;
  NnfPtr matrix;
  std::vector<std::pair<Var, Var>> before;  // (outer, inner) ordering constraints
};

inline void flatten_spine(const NnfPtr& n, NnfNode::Kind kind, std::vector<NnfPtr>& out) {
  if (n->kind == kind) {
    flatten_spine(n->a, kind, out);
    flatten_spine(n->b, kind, out);
  } else {
    out.push_back(n);
  }
}

inline Pulled pull(const NnfPtr& n, std::set<Var>& all_names) {
  if (n->kind == NnfNode::Lit) return {{}, n, {}};
  if (n->kind == NnfNode::NExists || n->kind == NnfNode::NForall) {
    Pulled sub = pull(n->a, all_names);
    Pulled out;
    const Quant q = n->kind == NnfNode::NExists ? Quant::Exists : Quant::Forall;
    out.prefix.emplace_back(q, n->bound);
    out.prefix.insert(out.prefix.end(), sub.prefix.begin(), sub.prefix.end());
    out.before = std::move(sub.before);
    for (const auto& [sq, sv] : sub.prefix) out.before.emplace_back(n->bound, sv);
    out.matrix = sub.matrix;
    return out;
  }

  // Conjunction or disjunction: pull the whole same-operator spine at once.
  const NnfNode::Kind kind = n->kind;
  const Quant mergeable = kind == NnfNode::NAnd ? Quant::Forall : Quant::Exists;
  std::vector<NnfPtr> parts;
  flatten_spine(n, kind, parts);

  Pulled acc;
  std::map<Var, Quant> seen;
  std::vector<NnfPtr> matrices;
  for (const NnfPtr& part : parts) {
    Pulled p = pull(part, all_names);
    // Resolve name clashes against what is already pulled: quantifiers of the
    // mergeable kind collapse into one, anything else is renamed apart.
    std::vector<Var> to_rename;
    for (const auto& [q, v] : p.prefix) {
      auto it = seen.find(v);
      if (it == seen.end()) continue;
      if (q == mergeable && it->second == mergeable) continue;  // merge below
      to_rename.push_back(v);
    }
    for (const Var& v : to_rename) {
      const Var fresh = fresh_var(v.name, all_names);
      all_names.insert(fresh);
      p.matrix = nnf_rename(p.matrix, v, fresh);
      for (auto& [bq, bv] : p.prefix)
        if (bv == v) bv = fresh;
      for (auto& [ov, iv] : p.before) {
        if (ov == v) ov = fresh;
        if (iv == v) iv = fresh;
      }
    }
    for (const auto& [q, v] : p.prefix) {
      if (seen.count(v)) continue;  // merged occurrence
      seen.emplace(v, q);
      acc.prefix.emplace_back(q, v);
    }
    acc.before.insert(acc.before.end(), p.before.begin(), p.before.end());
    matrices.push_back(p.matrix);
  }
  // Rebuild the matrix as a balanced tree to keep nesting depth logarithmic
  // on wide disjunctions.
  while (matrices.size() > 1) {
    std::vector<NnfPtr> next;
    for (size_t i = 0; i + 1 < matrices.size(); i += 2)
      next.push_back(nnf_bin(kind, matrices[i], matrices[i + 1]));
    if (matrices.size() % 2) next.push_back(matrices.back());
    matrices = std::move(next);
  }
  acc.matrix = matrices.front();
  return acc;
}

inline Pulled prenex_pull_sentence(const FormulaPtr& f) {
  if (!is_sentence(f)) throw SemanticError("prenex requires a sentence");
  std::set<Var> all_names = vars_of(f);
  std::set<Var> in_scope;
  const FormulaPtr renamed = rename_shadowed(f, in_scope, all_names);
  return pull(to_nnf(renamed, true), all_names);
}

}  // namespace detail

// Prenex normal form of a sentence, with the quantifier prefix arranged in
// the given outer-to-inner order. Shadowing re-quantifications are renamed
// apart first; same-variable existentials across disjuncts (dually,
// universals across conjuncts) merge into a single quantifier. The requested
// order must respect the nesting order of the remaining quantifiers.
inline FormulaPtr prenex(const FormulaPtr& f, const std::vector<Var>& var_order) {
  detail::Pulled pulled = detail::prenex_pull_sentence(f);

  std::map<Var, int> position;
  for (size_t i = 0; i < var_order.size(); ++i)
    position.emplace(var_order[i], static_cast<int>(i));
  for (const auto& [q, v] : pulled.prefix)
    if (!position.count(v))
      throw SemanticError("var_order misses quantified variable " + v.name);

  std::stable_sort(pulled.prefix.begin(), pulled.prefix.end(),
                   [&](const auto& a, const auto& b) {
                     return position.at(a.second) < position.at(b.second);
                   });

  std::map<Var, int> at;
  for (size_t i = 0; i < pulled.prefix.size(); ++i) at[pulled.prefix[i].second] = static_cast<int>(i);
  for (const auto& [outer, inner] : pulled.before)
    if (at.at(outer) >= at.at(inner))
      throw SemanticError("requested prenex ordering would reorder nested quantifiers " +
                          outer.name + " and " + inner.name);

  return build_prefixed(pulled.prefix, detail::nnf_to_core(pulled.matrix));
}

// Prenex normal form in the order the quantifiers come out (outermost first);
// always compatible.
inline FormulaPtr prenex(const FormulaPtr& f) {
  detail::Pulled pulled = detail::prenex_pull_sentence(f);
  return build_prefixed(pulled.prefix, detail::nnf_to_core(pulled.matrix));
}

}  // namespace relcalc::fo

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "relcalc/errors.hpp"
#include "relcalc/fo/ast.hpp"
#include "relcalc/model/structure.hpp"

namespace relcalc::sem {

// The denotation of a formula restricted to a finite support set of
// variables: a set of total assignments support -> {0..n-1}, stored as a bit
// vector indexed in big-endian mixed radix (first variable most significant).
// Restricting to a finite support is sound because satisfaction depends only
// on the variables occurring in the formula.
class AssignmentSet {
 public:
  AssignmentSet(std::vector<fo::Var> vars, int universe)
      : vars_(std::move(vars)), universe_(universe), bits_(size_of(vars_.size(), universe)) {}

  const std::vector<fo::Var>& vars() const { return vars_; }
  int universe() const { return universe_; }
  long long slots() const { return static_cast<long long>(bits_.size()); }

  bool get(long long idx) const { return bits_[idx]; }
  void set(long long idx, bool v = true) { bits_[idx] = v; }

  long long count() const {
    long long c = 0;
    for (bool b : bits_) c += b;
    return c;
  }

  bool is_full() const { return count() == slots(); }
  bool is_empty() const { return count() == 0; }

  int position_of(const fo::Var& v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || !(*it == v)) return -1;
    return static_cast<int>(it - vars_.begin());
  }

  // Value of the variable at `pos` inside the packed index.
  int digit(long long idx, int pos) const {
    return static_cast<int>(idx / stride(pos)) % universe_;
  }

  long long stride(int pos) const {
    long long s = 1;
    for (size_t i = pos + 1; i < vars_.size(); ++i) s *= universe_;
    return s;
  }

  bool contains(const std::map<fo::Var, int>& assignment) const {
    long long idx = 0;
    for (const auto& v : vars_) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw SemanticError("assignment misses variable " + v.name);
      idx = idx * universe_ + it->second;
    }
    return get(idx);
  }

  std::vector<std::map<fo::Var, int>> assignments() const {
    std::vector<std::map<fo::Var, int>> out;
    for (long long idx = 0; idx < slots(); ++idx) {
      if (!get(idx)) continue;
      std::map<fo::Var, int> a;
      for (size_t p = 0; p < vars_.size(); ++p) a[vars_[p]] = digit(idx, static_cast<int>(p));
      out.push_back(std::move(a));
    }
    return out;
  }

  // Projection onto a subset of the support. Dropped variables never affect
  // membership for the formulas evaluated here, so OR-ing the slices is an
  // exact restriction of the assignment set.
  AssignmentSet restrict_to(const std::vector<fo::Var>& subset) const {
    AssignmentSet out(subset, universe_);
    for (long long idx = 0; idx < slots(); ++idx) {
      if (!get(idx)) continue;
      long long oidx = 0;
      for (const auto& v : subset) {
        const int p = position_of(v);
        if (p < 0) throw SemanticError("restriction variable " + v.name + " not in support");
        oidx = oidx * universe_ + digit(idx, p);
      }
      out.set(oidx);
    }
    return out;
  }

 private:
  static size_t size_of(size_t k, int n) {
    size_t s = 1;
    for (size_t i = 0; i < k; ++i) s *= static_cast<size_t>(n);
    return s;
  }

  std::vector<fo::Var> vars_;
  int universe_;
  std::vector<bool> bits_;
};

namespace detail {

inline AssignmentSet eval_over(const model::Structure& m, const fo::FormulaPtr& f,
                               const std::vector<fo::Var>& support) {
  AssignmentSet out(support, m.universe);
  if (const auto* n = f->get_if<fo::Atom>()) {
    const model::Relation& rel = m.at(n->pred);
    const int pl = out.position_of(n->lhs), pr = out.position_of(n->rhs);
    for (long long idx = 0; idx < out.slots(); ++idx)
      if (rel.get(out.digit(idx, pl), out.digit(idx, pr))) out.set(idx);
    return out;
  }
  if (const auto* n = f->get_if<fo::Eq>()) {
    const int pl = out.position_of(n->lhs), pr = out.position_of(n->rhs);
    for (long long idx = 0; idx < out.slots(); ++idx)
      if (out.digit(idx, pl) == out.digit(idx, pr)) out.set(idx);
    return out;
  }
  if (const auto* n = f->get_if<fo::Not>()) {
    AssignmentSet sub = eval_over(m, n->sub, support);
    for (long long idx = 0; idx < out.slots(); ++idx) out.set(idx, !sub.get(idx));
    return out;
  }
  if (const auto* n = f->get_if<fo::And>()) {
    AssignmentSet l = eval_over(m, n->lhs, support);
    AssignmentSet r = eval_over(m, n->rhs, support);
    for (long long idx = 0; idx < out.slots(); ++idx) out.set(idx, l.get(idx) && r.get(idx));
    return out;
  }
  const auto* n = f->get_if<fo::Exists>();
  AssignmentSet sub = eval_over(m, n->sub, support);
  const int p = out.position_of(n->bound);
  const long long stride = out.stride(p);
  for (long long idx = 0; idx < out.slots(); ++idx) {
    const long long base = idx - out.digit(idx, p) * stride;
    for (int v = 0; v < m.universe; ++v) {
      if (sub.get(base + v * stride)) {
        out.set(idx);
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

// [[f]]^M restricted to x_set: the set of total assignments on x_set whose
// extensions satisfy f. Requires free_vars_of(f) to be contained in x_set.
inline AssignmentSet eval_fo(const model::Structure& m, const fo::FormulaPtr& f,
                             const std::set<fo::Var>& x_set) {
  for (const auto& v : fo::free_vars_of(f))
    if (!x_set.count(v)) throw SemanticError("free variable " + v.name + " not in support set");
  std::set<fo::Var> support_set = x_set;
  for (const auto& v : fo::vars_of(f)) support_set.insert(v);
  const std::vector<fo::Var> support(support_set.begin(), support_set.end());
  AssignmentSet full = detail::eval_over(m, f, support);
  return full.restrict_to(std::vector<fo::Var>(x_set.begin(), x_set.end()));
}

// M |= f: every assignment of the free variables satisfies f. A sentence is
// checked over one dummy variable, which makes the test non-vacuous on every
// universe without changing its meaning.
inline bool holds_fo(const model::Structure& m, const fo::FormulaPtr& f) {
  std::set<fo::Var> x_set = fo::free_vars_of(f);
  if (x_set.empty()) x_set.insert(fo::Var{"x"});
  return eval_fo(m, f, x_set).is_full();
}

}  // namespace relcalc::sem

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "relcalc/cor/ast.hpp"
#include "relcalc/cor/print.hpp"
#include "relcalc/errors.hpp"

namespace relcalc::trans {

// One fresh relation variable per distinct subterm, with its defining
// equation. Structurally identical subterms share a name, so gamma has
// exactly one equation per distinct subterm and every equation has constant
// size.
struct TseitinEnv {
  // (subterm, fresh name) in introduction order: children precede parents.
  std::vector<std::pair<cor::TermPtr, std::string>> names;
  std::map<std::string, std::string> name_by_print;
  std::vector<cor::QfPtr> gamma;
  std::string root;

  const std::string& name_of(const cor::TermPtr& t) const {
    auto it = name_by_print.find(cor::print_term(t));
    if (it == name_by_print.end())
      throw SemanticError("no fresh name was introduced for subterm " + cor::print_term(t));
    return it->second;
  }
};

namespace detail {

inline uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex16(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[i] = digits[v & 0xF];
  return out;
}

// Fresh name scheme: t_ + stable hash of the printed subterm, bumped with a
// numeric suffix in the (unlikely) event of a collision.
inline std::string tseitin_name(const std::string& printed, std::set<std::string>& taken) {
  std::string base = "t_" + hex16(fnv1a64(printed));
  std::string name = base;
  for (int i = 1; taken.count(name); ++i) name = base + "_" + std::to_string(i);
  taken.insert(name);
  return name;
}

inline const std::string& tseitin_visit(const cor::TermPtr& t, TseitinEnv& env,
                                        std::set<std::string>& taken) {
  const std::string printed = cor::print_term(t);
  if (auto it = env.name_by_print.find(printed); it != env.name_by_print.end()) return it->second;

  cor::TermPtr rhs;
  if (const auto* n = t->get_if<cor::RelVar>()) {
    rhs = cor::rel(n->name);
  } else if (t->get_if<cor::Id>()) {
    rhs = cor::id();
  } else if (const auto* n = t->get_if<cor::Comp>()) {
    rhs = cor::comp(cor::rel(tseitin_visit(n->sub, env, taken)));
  } else if (const auto* n = t->get_if<cor::Conv>()) {
    rhs = cor::conv(cor::rel(tseitin_visit(n->sub, env, taken)));
  } else if (const auto* n = t->get_if<cor::Inter>()) {
    const std::string l = tseitin_visit(n->lhs, env, taken);
    const std::string r = tseitin_visit(n->rhs, env, taken);
    rhs = cor::inter(cor::rel(l), cor::rel(r));
  } else {
    const auto* dd = t->get_if<cor::Dot>();
    const std::string l = tseitin_visit(dd->lhs, env, taken);
    const std::string r = tseitin_visit(dd->rhs, env, taken);
    rhs = cor::dot(cor::rel(l), cor::rel(r));
  }

  const std::string name = tseitin_name(printed, taken);
  auto [it, inserted] = env.name_by_print.emplace(printed, name);
  env.names.emplace_back(t, name);
  env.gamma.push_back(cor::equation(cor::rel(name), std::move(rhs)));
  return it->second;
}

}  // namespace detail

inline TseitinEnv tseitin(const cor::TermPtr& root) {
  TseitinEnv env;
  std::set<std::string> taken = cor::rel_vars_of(root);
  env.root = detail::tseitin_visit(root, env, taken);
  return env;
}

}  // namespace relcalc::trans

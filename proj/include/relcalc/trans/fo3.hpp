#pragma once

#include <set>
#include <string>
#include <vector>

#include "relcalc/errors.hpp"
#include "relcalc/fo/ast.hpp"
#include "relcalc/model/ktuple.hpp"
#include "relcalc/trans/fold.hpp"
#include "relcalc/trans/tk.hpp"

namespace relcalc::trans {

// The three-variable pool of the direct FO -> FO3 translation, ordered
// x1 < x2 < x3.
inline const std::vector<fo::Var>& fo3_pool() {
  static const std::vector<fo::Var> pool{fo::Var{"x1"}, fo::Var{"x2"}, fo::Var{"x3"}};
  return pool;
}

namespace detail {

inline const fo::Var& pool_min_excluding(const fo::Var& a) {
  for (const auto& v : fo3_pool())
    if (!(v == a)) return v;
  throw SemanticError("three-variable pool exhausted");
}

inline const fo::Var& pool_min_excluding(const fo::Var& a, const fo::Var& b) {
  for (const auto& v : fo3_pool())
    if (!(v == a) && !(v == b)) return v;
  throw SemanticError("three-variable pool exhausted");
}

}  // namespace detail

// The FO3= axiom set characterizing k-tuple structures. Boundary intervals
// E_[1,0](x,y) and E_[k+1,k](x,y) denote the true formula, instantiated over
// the pool's third variable so the axioms stay within three variable names.
inline std::vector<fo::FormulaPtr> gamma_fo3(int k, const std::set<std::string>& sigma_used) {
  if (k < 1) throw SemanticError("k must be at least 1");
  const auto extras = model::sigma_k_extras(k);
  for (const auto& name : sigma_used)
    if (extras.count(name))
      throw SemanticError("relation name '" + name + "' collides with the k-tuple signature");

  const fo::Var x = fo3_pool()[0], y = fo3_pool()[1], z = fo3_pool()[2];
  const fo::FormulaPtr truth_z = fo::exists(z, fo::eq(z, z));
  auto e_fml = [&](int lo, int hi) -> fo::FormulaPtr {
    if (lo > hi) return truth_z;
    return fo::atom(model::e_name(lo, hi), x, y);
  };
  auto u_at = [&](const fo::Var& a, const fo::Var& b) { return fo::atom(model::u_name(), a, b); };

  std::vector<fo::FormulaPtr> axioms;

  std::vector<fo::FormulaPtr> projections;
  for (int j = 1; j <= k; ++j) projections.push_back(fo::atom(model::pi_name(j), x, y));
  axioms.push_back(fo::forall(
      x, fo::forall(y, fo::iff(u_at(x, y), balanced_fold(std::move(projections), fo::and_)))));

  for (int i = 1; i <= k; ++i) {
    const std::string pi = model::pi_name(i);
    const fo::FormulaPtr shared_image =
        fo::exists(z, fo::and_(fo::atom(pi, x, z), fo::atom(pi, y, z)));
    axioms.push_back(fo::forall(
        x, fo::forall(y, fo::iff(e_fml(1, i), fo::and_(e_fml(1, i - 1), shared_image)))));
    axioms.push_back(fo::forall(
        x, fo::forall(y, fo::iff(e_fml(i, k), fo::and_(e_fml(i + 1, k), shared_image)))));
    axioms.push_back(fo::forall(
        x, fo::forall(y, fo::iff(fo::atom(model::q_name(i), x, y),
                                 fo::and_(e_fml(1, i - 1), e_fml(i + 1, k))))));
    axioms.push_back(fo::forall(
        x, fo::forall(y, fo::forall(z, fo::implies(fo::and_(fo::atom(pi, x, y), fo::atom(pi, x, z)),
                                                   fo::eq(y, z))))));
    axioms.push_back(fo::forall(x, fo::exists(y, fo::and_(fo::atom(pi, x, y), u_at(y, y)))));
    axioms.push_back(fo::forall(
        x, fo::forall(y, fo::implies(u_at(y, y),
                                     fo::exists(z, fo::and_(fo::atom(model::q_name(i), x, z),
                                                            fo::atom(pi, z, y)))))));
  }

  axioms.push_back(fo::forall(x, fo::forall(y, fo::implies(u_at(x, y), fo::eq(x, y)))));
  axioms.push_back(fo::forall(x, fo::forall(y, fo::iff(fo::eq(x, y), e_fml(1, k)))));
  axioms.push_back(fo::exists(x, u_at(x, x)));
  for (const auto& a : sigma_used)
    axioms.push_back(fo::forall(
        x, fo::forall(y, fo::implies(fo::atom(a, x, y), fo::and_(u_at(x, x), u_at(y, y))))));
  return axioms;
}

// T_z^(k): the direct FO3 translation. The pivot variable z ranges over the
// pool; z' and z'' are the least pool variables distinct from z (and z').
inline fo::FormulaPtr t_z_k(const fo::FormulaPtr& f, const TranslationUnit& unit,
                            const fo::Var& z) {
  const fo::Var& zp = detail::pool_min_excluding(z);
  const fo::Var& zpp = detail::pool_min_excluding(z, zp);
  if (const auto* n = f->get_if<fo::Atom>()) {
    const int i = unit.index_of(n->lhs), j = unit.index_of(n->rhs);
    return fo::exists(
        zp, fo::exists(zpp, fo::and_(fo::and_(fo::atom(model::pi_name(i), z, zp),
                                              fo::atom(n->pred, zp, zpp)),
                                     fo::atom(model::pi_name(j), z, zpp))));
  }
  if (const auto* n = f->get_if<fo::Eq>()) {
    const int i = unit.index_of(n->lhs), j = unit.index_of(n->rhs);
    return fo::exists(zp, fo::and_(fo::atom(model::pi_name(i), z, zp),
                                   fo::atom(model::pi_name(j), z, zp)));
  }
  if (const auto* n = f->get_if<fo::Not>()) return fo::not_(t_z_k(n->sub, unit, z));
  if (const auto* n = f->get_if<fo::And>())
    return fo::and_(t_z_k(n->lhs, unit, z), t_z_k(n->rhs, unit, z));
  const auto* n = f->get_if<fo::Exists>();
  const int i = unit.index_of(n->bound);
  return fo::exists(zp, fo::and_(fo::atom(model::q_name(i), z, zp), t_z_k(n->sub, unit, zp)));
}

// (/\ Gamma_FO3^(k)) -> T_z^(k)(f) with z = x1 and k padded to at least 3.
inline fo::FormulaPtr fo_to_fo3(const fo::FormulaPtr& f) {
  const TranslationUnit unit = make_unit(f, 3);
  auto axioms = gamma_fo3(unit.k, unit.sigma_used);
  return fo::implies(and_all(std::move(axioms)), t_z_k(f, unit, fo3_pool()[0]));
}

}  // namespace relcalc::trans

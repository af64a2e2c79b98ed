#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "relcalc/errors.hpp"
#include "relcalc/model/structure.hpp"
#include "relcalc/sem/eval_cor.hpp"
#include "relcalc/trans/sigma2_normalize.hpp"
#include "relcalc/trans/tseitin.hpp"

namespace relcalc::harness {

// The witness construction from the Tseitin lemma: interpret every fresh
// name by the denotation of its subterm. The result satisfies all defining
// equations and agrees with the root term on a_root.
inline model::Structure tseitin_extend(const model::Structure& m, const trans::TseitinEnv& env) {
  model::Structure out = m;
  for (const auto& [sub, name] : env.names) out.add(name, sem::eval_term(m, sub));
  return out;
}

// Witness extension for the sigma2 normal form: the Tseitin extension plus,
// for every replaced complement b^c = c, the complement relation itself.
inline model::Structure sigma2_extend(const model::Structure& m, const trans::Sigma2Result& s2) {
  model::Structure out = tseitin_extend(m, s2.env);
  for (const auto& [v, nv] : s2.comp_name) out.add(nv, out.at(v).complemented());
  return out;
}

// Quotient of a structure by an equivalence relation that is a congruence
// for every other relation. Classes map to 0..c-1 in order of their least
// member; the equivalence relation itself becomes equality and is dropped.
inline model::Structure quotient_by_E(const model::Structure& m, const std::string& e_name) {
  const model::Relation& e = m.at(e_name);
  const int n = m.universe;
  for (int v = 0; v < n; ++v)
    if (!e.get(v, v)) throw SemanticError("relation '" + e_name + "' is not reflexive");
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (e.get(v, w) != e.get(w, v))
        throw SemanticError("relation '" + e_name + "' is not symmetric");
  if (!(e.compose(e) == e))
    throw SemanticError("relation '" + e_name + "' is not transitive");
  for (const auto& [name, rel] : m.relations) {
    if (name == e_name) continue;
    if (!(e.compose(rel).compose(e) == rel))
      throw SemanticError("relation '" + e_name + "' is not a congruence for '" + name + "'");
  }

  std::vector<int> cls(n, -1);
  int classes = 0;
  for (int v = 0; v < n; ++v) {
    if (cls[v] >= 0) continue;
    for (int w = v; w < n; ++w)
      if (e.get(v, w)) cls[w] = classes;
    ++classes;
  }

  model::Structure out;
  out.universe = classes;
  for (const auto& [name, rel] : m.relations) {
    if (name == e_name) continue;
    model::Relation lifted(classes);
    for (auto [a, b] : rel.pairs()) lifted.set(cls[a], cls[b]);
    out.add(name, std::move(lifted));
  }
  return out;
}

}  // namespace relcalc::harness

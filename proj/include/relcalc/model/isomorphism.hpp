#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "relcalc/errors.hpp"
#include "relcalc/model/structure.hpp"

namespace relcalc::model {

// Brute-force isomorphism test over the named relations: searches for a
// bijection preserving each relation in both directions. Intended for desk
// scale only, hence the hard bound on the universe size.
inline bool is_isomorphic(const Structure& m1, const Structure& m2,
                          const std::set<std::string>& names, int max_universe = 8) {
  if (m1.universe != m2.universe) return false;
  if (m1.universe > max_universe)
    throw BudgetError("isomorphism search bound exceeded: universe " +
                      std::to_string(m1.universe) + " > " + std::to_string(max_universe));
  for (const auto& name : names) {
    if (!m1.has(name) || !m2.has(name)) return false;
    if (m1.at(name).count() != m2.at(name).count()) return false;
  }
  const int n = m1.universe;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& name : names) {
      const Relation& r1 = m1.at(name);
      const Relation& r2 = m2.at(name);
      for (int i = 0; ok && i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (r1.get(i, j) != r2.get(perm[i], perm[j])) {
            ok = false;
            break;
          }
      if (!ok) break;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace relcalc::model

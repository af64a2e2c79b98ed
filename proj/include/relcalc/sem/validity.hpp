#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>

#include "relcalc/model/enumerate.hpp"
#include "relcalc/sem/eval_cor.hpp"
#include "relcalc/sem/eval_fo.hpp"

namespace relcalc::sem {

// Outcome of a bounded validity sweep. "Valid" here always means valid up to
// the recorded size bound; true finite validity is not decidable by
// enumeration.
struct ValidityResult {
  bool valid = true;
  int max_size = 0;
  std::optional<model::Structure> counterexample;
};

namespace detail {

template <class HoldsFn>
ValidityResult check_valid_upto_impl(const std::set<std::string>& signature, int max_size,
                                     long long budget, HoldsFn&& holds) {
  ValidityResult result;
  result.max_size = max_size;
  long long visited = 0;
  for (int size = 1; size <= max_size; ++size) {
    model::StructureEnumerator en(signature, size, budget);
    if (visited + en.total() > budget)
      throw BudgetError("bounded validity sweep exceeds budget " + std::to_string(budget));
    visited += en.total();
    while (auto m = en.next()) {
      if (!holds(*m)) {
        result.valid = false;
        result.counterexample = std::move(*m);
        return result;
      }
    }
  }
  return result;
}

}  // namespace detail

// Enumerates all structures over `signature` of sizes 1..max_size and returns
// the first refuting structure, if any; sizes ascend and relation bitmasks
// count up, so the lowest-index counterexample wins deterministically.
inline ValidityResult check_valid_upto(const fo::FormulaPtr& f,
                                       const std::set<std::string>& signature, int max_size,
                                       long long budget = model::default_budget()) {
  return detail::check_valid_upto_impl(signature, max_size, budget,
                                       [&](const model::Structure& m) { return holds_fo(m, f); });
}

inline ValidityResult check_valid_upto(const cor::QfPtr& f,
                                       const std::set<std::string>& signature, int max_size,
                                       long long budget = model::default_budget()) {
  return detail::check_valid_upto_impl(signature, max_size, budget,
                                       [&](const model::Structure& m) { return holds_qf(m, f); });
}

}  // namespace relcalc::sem

#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "relcalc/cor/ast.hpp"
#include "relcalc/cor/print.hpp"
#include "relcalc/errors.hpp"
#include "relcalc/fo/ast.hpp"
#include "relcalc/fo/print.hpp"

namespace relcalc::trans {

// Combines a non-empty list pairwise into a balanced tree, preserving the
// left-to-right order of the leaves.
template <class T, class F>
T balanced_fold(std::vector<T> items, F combine) {
  if (items.empty()) throw SemanticError("cannot fold an empty collection");
  while (items.size() > 1) {
    std::vector<T> next;
    next.reserve(items.size() / 2 + 1);
    for (size_t i = 0; i + 1 < items.size(); i += 2) next.push_back(combine(items[i], items[i + 1]));
    if (items.size() % 2) next.push_back(items.back());
    items = std::move(next);
  }
  return items.front();
}

// Conjunction of a formula set, elements ordered lexicographically by their
// printed form and deduplicated.
inline fo::FormulaPtr and_all(std::vector<fo::FormulaPtr> formulas) {
  std::vector<std::pair<std::string, fo::FormulaPtr>> keyed;
  keyed.reserve(formulas.size());
  for (auto& f : formulas) keyed.emplace_back(fo::print_fo(f), std::move(f));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<fo::FormulaPtr> sorted;
  sorted.reserve(keyed.size());
  for (auto& [k, f] : keyed) sorted.push_back(std::move(f));
  return balanced_fold(std::move(sorted), [](const fo::FormulaPtr& a, const fo::FormulaPtr& b) {
    return fo::and_(a, b);
  });
}

inline cor::QfPtr and_all_qf(std::vector<cor::QfPtr> formulas) {
  std::vector<std::pair<std::string, cor::QfPtr>> keyed;
  keyed.reserve(formulas.size());
  for (auto& f : formulas) keyed.emplace_back(cor::print_qf(f), std::move(f));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<cor::QfPtr> sorted;
  sorted.reserve(keyed.size());
  for (auto& [k, f] : keyed) sorted.push_back(std::move(f));
  return balanced_fold(std::move(sorted),
                       [](const cor::QfPtr& a, const cor::QfPtr& b) { return cor::qf_and(a, b); });
}

// Union of a term set, ordered lexicographically by printed form.
inline cor::TermPtr union_all(std::vector<cor::TermPtr> terms) {
  std::vector<std::pair<std::string, cor::TermPtr>> keyed;
  keyed.reserve(terms.size());
  for (auto& t : terms) keyed.emplace_back(cor::print_term(t), std::move(t));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<cor::TermPtr> sorted;
  sorted.reserve(keyed.size());
  for (auto& [k, t] : keyed) sorted.push_back(std::move(t));
  return balanced_fold(std::move(sorted),
                       [](const cor::TermPtr& a, const cor::TermPtr& b) { return cor::union_(a, b); });
}

// Intersection of an indexed family, kept in the given index order.
inline cor::TermPtr inter_all(std::vector<cor::TermPtr> terms) {
  return balanced_fold(std::move(terms),
                       [](const cor::TermPtr& a, const cor::TermPtr& b) { return cor::inter(a, b); });
}

// Disjunction in the given order; callers decide where each disjunct goes
// (the Goedel reduction keeps its residual disjunct last).
inline fo::FormulaPtr or_all(std::vector<fo::FormulaPtr> formulas) {
  return balanced_fold(std::move(formulas), [](const fo::FormulaPtr& a, const fo::FormulaPtr& b) {
    return fo::or_(a, b);
  });
}

}  // namespace relcalc::trans

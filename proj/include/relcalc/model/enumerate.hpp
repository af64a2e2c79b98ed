#pragma once

#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "relcalc/errors.hpp"
#include "relcalc/model/structure.hpp"

namespace relcalc::model {

// Enumeration budget: how many structures a single exhaustive sweep may
// visit. RELCALC_BUDGET overrides the default.
inline long long default_budget() {
  if (const char* env = std::getenv("RELCALC_BUDGET")) {
    const long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 1LL << 22;
}

// Streams every structure with the given universe size and signature exactly
// once: relation contents are read off a single counter (bitmasks counting
// up, relations in name order, pair (i,j) at bit i*size+j).
class StructureEnumerator {
 public:
  StructureEnumerator(const std::set<std::string>& signature, int size,
                      long long budget = default_budget())
      : names_(signature.begin(), signature.end()), size_(size) {
    if (size < 1) throw SemanticError("universe size must be at least 1");
    const long long bits = static_cast<long long>(names_.size()) * size * size;
    if (bits > 62 || (1LL << bits) > budget)
      throw BudgetError("structure enumeration over " + std::to_string(names_.size()) +
                        " relations at size " + std::to_string(size) + " exceeds budget " +
                        std::to_string(budget));
    total_ = 1LL << bits;
  }

  long long total() const { return total_; }

  std::optional<Structure> next() {
    if (cursor_ >= total_) return std::nullopt;
    Structure s;
    s.universe = size_;
    long long bit = 0;
    for (const auto& name : names_) {
      Relation r(size_);
      for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j, ++bit)
          if ((cursor_ >> bit) & 1) r.set(i, j);
      s.add(name, std::move(r));
    }
    ++cursor_;
    return s;
  }

 private:
  std::vector<std::string> names_;
  int size_;
  long long total_ = 0;
  long long cursor_ = 0;
};

}  // namespace relcalc::model

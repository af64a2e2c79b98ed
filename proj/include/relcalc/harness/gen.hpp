#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "relcalc/cor/ast.hpp"
#include "relcalc/errors.hpp"
#include "relcalc/fo/ast.hpp"
#include "relcalc/model/structure.hpp"

namespace relcalc::harness {

// Everything the suites need to be reproducible: the same seed yields the
// same sample sequence on every platform (mt19937_64 is fully specified; no
// standard distributions are used).
struct GenConfig {
  uint64_t seed = 42;
  int max_formula_depth = 4;
  int max_universe = 3;
  int k_max = 3;
  int sample_count = 0;  // 0 = the suite's own default
  std::string corpus_dir = "relcalc-corpus";
};

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(uint64_t seed) : eng(seed) {}

  uint64_t next() { return eng(); }
  int below(int bound) { return bound <= 1 ? 0 : static_cast<int>(next() % bound); }
  bool coin() { return (next() & 1) != 0; }
};

inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline model::Structure gen_structure(Rng& rng, const std::set<std::string>& signature, int n) {
  if (n < 1) throw SemanticError("universe size must be at least 1");
  model::Structure s;
  s.universe = n;
  for (const auto& name : signature) {
    model::Relation r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rng.coin()) r.set(i, j);
    s.add(name, std::move(r));
  }
  return s;
}

struct TermGenOptions {
  bool allow_conv = true;
  bool allow_id = true;
};

// Depth-bounded recursive generation, biased toward leaves (probability 1/2
// of stopping at each level) so the exact oracles stay fast.
inline cor::TermPtr gen_term(Rng& rng, const std::vector<std::string>& signature, int max_depth,
                             TermGenOptions opt = {}) {
  if (signature.empty()) throw SemanticError("term generation needs a non-empty signature");
  const bool leaf = max_depth <= 0 || rng.coin();
  if (leaf) {
    if (opt.allow_id && rng.below(4) == 0) return cor::id();
    return cor::rel(signature[rng.below(static_cast<int>(signature.size()))]);
  }
  switch (rng.below(opt.allow_conv ? 4 : 3)) {
    case 0:
      return cor::comp(gen_term(rng, signature, max_depth - 1, opt));
    case 1:
      return cor::inter(gen_term(rng, signature, max_depth - 1, opt),
                        gen_term(rng, signature, max_depth - 1, opt));
    case 2:
      return cor::dot(gen_term(rng, signature, max_depth - 1, opt),
                      gen_term(rng, signature, max_depth - 1, opt));
    default:
      return cor::conv(gen_term(rng, signature, max_depth - 1, opt));
  }
}

inline cor::QfPtr gen_qf(Rng& rng, const std::vector<std::string>& signature, int max_depth,
                         int term_depth, TermGenOptions opt = {}) {
  const bool leaf = max_depth <= 0 || rng.coin();
  if (leaf)
    return cor::equation(gen_term(rng, signature, term_depth, opt),
                         gen_term(rng, signature, term_depth, opt));
  if (rng.coin()) return cor::qf_not(gen_qf(rng, signature, max_depth - 1, term_depth, opt));
  return cor::qf_and(gen_qf(rng, signature, max_depth - 1, term_depth, opt),
                     gen_qf(rng, signature, max_depth - 1, term_depth, opt));
}

inline fo::FormulaPtr gen_formula(Rng& rng, const std::vector<std::string>& signature,
                                  const std::vector<fo::Var>& var_pool, int max_depth) {
  if (var_pool.empty()) throw SemanticError("formula generation needs a non-empty variable pool");
  auto var = [&] { return var_pool[rng.below(static_cast<int>(var_pool.size()))]; };
  const bool leaf = max_depth <= 0 || rng.coin();
  if (leaf) {
    if (!signature.empty() && rng.below(3) != 0)
      return fo::atom(signature[rng.below(static_cast<int>(signature.size()))], var(), var());
    return fo::eq(var(), var());
  }
  switch (rng.below(3)) {
    case 0:
      return fo::not_(gen_formula(rng, signature, var_pool, max_depth - 1));
    case 1:
      return fo::and_(gen_formula(rng, signature, var_pool, max_depth - 1),
                      gen_formula(rng, signature, var_pool, max_depth - 1));
    default:
      return fo::exists(var(), gen_formula(rng, signature, var_pool, max_depth - 1));
  }
}

// A random sentence: a generated formula with its free variables closed off
// under an alternating quantifier prefix.
inline fo::FormulaPtr gen_sentence(Rng& rng, const std::vector<std::string>& signature,
                                   const std::vector<fo::Var>& var_pool, int max_depth) {
  fo::FormulaPtr f = gen_formula(rng, signature, var_pool, max_depth);
  for (const auto& v : fo::free_vars_of(f))
    f = rng.coin() ? fo::exists(v, f) : fo::forall(v, f);
  return f;
}

}  // namespace relcalc::harness

#pragma once

#include <set>
#include <string>
#include <vector>

#include "relcalc/errors.hpp"
#include "relcalc/model/isomorphism.hpp"
#include "relcalc/model/structure.hpp"

namespace relcalc::model {

// Canonical integer encoding of k-tuples over {0..n-1}: big-endian base n.
// The first component is the most significant digit, so the tuple <0,1> over
// n=2 encodes to 1 and <1,0> to 2.
struct TupleIndex {
  static long long encode(const std::vector<int>& components, int n) {
    long long idx = 0;
    for (int c : components) idx = idx * n + c;
    return idx;
  }

  static std::vector<int> decode(long long index, int n, int k) {
    std::vector<int> components(k);
    for (int pos = k - 1; pos >= 0; --pos) {
      components[pos] = static_cast<int>(index % n);
      index /= n;
    }
    return components;
  }
};

// Relation names of the k-tuple signature. These are ordinary identifiers so
// the generated structures interoperate with both concrete grammars.
inline std::string u_name() { return "u"; }
inline std::string pi_name(int i) { return "pi" + std::to_string(i); }
inline std::string q_name(int i) { return "q" + std::to_string(i); }
inline std::string e_name(int lo, int hi) {
  return "e" + std::to_string(lo) + "_" + std::to_string(hi);
}

// The extra symbols of Sigma^(k): u plus, for 1 <= i <= k, pi_i, q_i, and the
// prefix/suffix coordinate-equality relations e_[1,i] and e_[i,k].
inline std::set<std::string> sigma_k_extras(int k) {
  std::set<std::string> names{u_name()};
  for (int i = 1; i <= k; ++i) {
    names.insert(pi_name(i));
    names.insert(q_name(i));
    names.insert(e_name(1, i));
    names.insert(e_name(i, k));
  }
  return names;
}

namespace detail {

inline long long pow_ll(int base, int exp) {
  long long p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

// Fills pairs (t, t') where t' agrees with t on every coordinate in [lo, hi]
// (1-based) and is arbitrary elsewhere.
inline Relation equal_on_range(int n, int k, int lo, int hi) {
  const long long total = pow_ll(n, k);
  Relation r(static_cast<int>(total));
  std::vector<int> free_positions;
  for (int p = 1; p <= k; ++p)
    if (p < lo || p > hi) free_positions.push_back(p - 1);
  const long long variants = pow_ll(n, static_cast<int>(free_positions.size()));
  for (long long t = 0; t < total; ++t) {
    std::vector<int> digits = TupleIndex::decode(t, n, k);
    std::vector<int> other = digits;
    for (long long v = 0; v < variants; ++v) {
      long long rest = v;
      for (int p : free_positions) {
        other[p] = static_cast<int>(rest % n);
        rest /= n;
      }
      r.set(static_cast<int>(t), static_cast<int>(TupleIndex::encode(other, n)));
    }
  }
  return r;
}

}  // namespace detail

// The k-tuple structure M^(k): universe D^k with each base vertex v embedded
// as the constant tuple <v,...,v>, projections pi_i, the diagonal predicate
// u, quantifier relations q_i and coordinate-equality relations e_[i,i'].
inline Structure k_tuple_structure(const Structure& m, int k,
                                   const std::set<std::string>& sigma_used,
                                   long long max_vertices = 1'000'000) {
  if (k < 1) throw SemanticError("k must be at least 1");
  for (const auto& name : sigma_used)
    if (!m.has(name)) throw SemanticError("relation symbol '" + name + "' is not interpreted");
  const auto extras = sigma_k_extras(k);
  for (const auto& name : sigma_used)
    if (extras.count(name))
      throw SemanticError("relation name '" + name + "' collides with the k-tuple signature");

  const int n = m.universe;
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    total *= n;
    if (total > max_vertices)
      throw BudgetError("k-tuple structure would have more than " +
                        std::to_string(max_vertices) + " vertices");
  }

  Structure out;
  out.universe = static_cast<int>(total);

  auto const_tuple = [&](int v) {
    return static_cast<int>(TupleIndex::encode(std::vector<int>(k, v), n));
  };

  for (const auto& name : sigma_used) {
    Relation r(out.universe);
    for (auto [v, w] : m.at(name).pairs()) r.set(const_tuple(v), const_tuple(w));
    out.add(name, std::move(r));
  }

  Relation u(out.universe);
  for (int v = 0; v < n; ++v) u.set(const_tuple(v), const_tuple(v));
  out.add(u_name(), std::move(u));

  for (int i = 1; i <= k; ++i) {
    Relation pi(out.universe);
    for (long long t = 0; t < total; ++t) {
      const auto digits = TupleIndex::decode(t, n, k);
      pi.set(static_cast<int>(t), const_tuple(digits[i - 1]));
    }
    out.add(pi_name(i), std::move(pi));

    Relation q(out.universe);
    for (long long t = 0; t < total; ++t) {
      auto digits = TupleIndex::decode(t, n, k);
      for (int v = 0; v < n; ++v) {
        digits[i - 1] = v;
        q.set(static_cast<int>(t), static_cast<int>(TupleIndex::encode(digits, n)));
      }
    }
    out.add(q_name(i), std::move(q));
  }

  for (int i = 1; i <= k; ++i) {
    if (!out.has(e_name(1, i))) out.add(e_name(1, i), detail::equal_on_range(n, k, 1, i));
    if (!out.has(e_name(i, k))) out.add(e_name(i, k), detail::equal_on_range(n, k, i, k));
  }
  return out;
}

// Membership in the isomorphism closure of k-TUPLE: reconstructs the
// candidate base structure from u and the projections and checks isomorphism,
// with a brute-force sweep over small bases as a fallback.
inline bool is_k_tuple(const Structure& m, int k, const std::set<std::string>& sigma_used,
                       int iso_bound = 8, long long fallback_budget = 65536) {
  if (k < 1) throw SemanticError("k must be at least 1");
  int n = -1;
  for (int cand = 1; detail::pow_ll(cand, k) <= m.universe; ++cand)
    if (detail::pow_ll(cand, k) == m.universe) n = cand;
  if (n < 0) return false;

  const auto extras = sigma_k_extras(k);
  for (const auto& name : extras)
    if (!m.has(name)) return false;
  for (const auto& name : sigma_used)
    if (!m.has(name)) return false;

  std::set<std::string> all_names = extras;
  all_names.insert(sigma_used.begin(), sigma_used.end());

  const Relation& u = m.at(u_name());
  for (auto [a, b] : u.pairs())
    if (a != b) return false;  // u must stay inside the identity

  std::vector<int> u0;
  for (int v = 0; v < m.universe; ++v)
    if (u.get(v, v)) u0.push_back(v);

  if (static_cast<int>(u0.size()) == n) {
    std::vector<int> index_of(m.universe, -1);
    for (int i = 0; i < n; ++i) index_of[u0[i]] = i;
    Structure base;
    base.universe = n;
    for (const auto& name : sigma_used) {
      Relation r(n);
      for (auto [a, b] : m.at(name).pairs())
        if (index_of[a] >= 0 && index_of[b] >= 0) r.set(index_of[a], index_of[b]);
      base.add(name, std::move(r));
    }
    if (is_isomorphic(m, k_tuple_structure(base, k, sigma_used), all_names, iso_bound))
      return true;
  }

  // Fallback: sweep every base structure of size n over sigma_used.
  const long long bits = static_cast<long long>(sigma_used.size()) * n * n;
  if (bits > 62 || (1LL << bits) > fallback_budget)
    throw BudgetError("is_k_tuple fallback enumeration exceeds budget");
  const std::vector<std::string> names(sigma_used.begin(), sigma_used.end());
  for (long long mask = 0; mask < (1LL << bits); ++mask) {
    Structure base;
    base.universe = n;
    long long bit = 0;
    for (const auto& name : names) {
      Relation r(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j, ++bit)
          if ((mask >> bit) & 1) r.set(i, j);
      base.add(name, std::move(r));
    }
    if (is_isomorphic(m, k_tuple_structure(base, k, sigma_used), all_names, iso_bound))
      return true;
  }
  return false;
}

}  // namespace relcalc::model

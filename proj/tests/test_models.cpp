#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "relcalc/harness/gen.hpp"
#include "relcalc/model/enumerate.hpp"
#include "relcalc/model/isomorphism.hpp"
#include "relcalc/model/ktuple.hpp"
#include "relcalc/model/structure.hpp"

using namespace relcalc;

namespace {

model::Structure two_elem() {
  model::Structure m;
  m.universe = 2;
  model::Relation a(2), b(2);
  a.set(0, 1);
  b.set(1, 0);
  m.add("a", std::move(a));
  m.add("b", std::move(b));
  return m;
}

model::Relation from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  model::Relation r(n);
  for (auto [a, b] : pairs) r.set(a, b);
  return r;
}

}  // namespace

TEST_CASE("tuple encoding is a big-endian bijection") {
  CHECK(model::TupleIndex::encode({0, 1}, 2) == 1);
  CHECK(model::TupleIndex::encode({1, 0}, 2) == 2);
  harness::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + rng.below(3), k = 1 + rng.below(4);
    std::vector<int> tuple(k);
    for (auto& c : tuple) c = rng.below(n);
    CHECK(model::TupleIndex::decode(model::TupleIndex::encode(tuple, n), n, k) == tuple);
  }
}

TEST_CASE("the 2-tuple structure of the two-element example") {
  const auto mk = model::k_tuple_structure(two_elem(), 2, {"a", "b"});
  CHECK(mk.universe == 4);
  CHECK(mk.at("a") == from_pairs(4, {{0, 3}}));
  CHECK(mk.at("b") == from_pairs(4, {{3, 0}}));
  CHECK(mk.at("u") == from_pairs(4, {{0, 0}, {3, 3}}));
  CHECK(mk.at("pi1") == from_pairs(4, {{0, 0}, {1, 0}, {2, 3}, {3, 3}}));
  CHECK(mk.at("pi2") == from_pairs(4, {{0, 0}, {1, 3}, {2, 0}, {3, 3}}));
  CHECK(mk.at("q1") ==
        from_pairs(4, {{0, 0}, {0, 2}, {1, 1}, {1, 3}, {2, 0}, {2, 2}, {3, 1}, {3, 3}}));
  CHECK(mk.at("q2") ==
        from_pairs(4, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}));
  CHECK(mk.at("e1_1") == mk.at("q2"));
  CHECK(mk.at("e2_2") == mk.at("q1"));
  CHECK(mk.at("e1_2") == model::Relation::identity(4));
}

TEST_CASE("the 1-tuple structure keeps the universe and degenerates cleanly") {
  harness::Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + rng.below(3);
    const auto m = harness::gen_structure(rng, {"a"}, n);
    const auto m1 = model::k_tuple_structure(m, 1, {"a"});
    CHECK(m1.universe == n);
    CHECK(m1.at("a") == m.at("a"));
    CHECK(m1.at("u") == model::Relation::identity(n));
    CHECK(m1.at("pi1") == model::Relation::identity(n));
    CHECK(m1.at("e1_1") == model::Relation::identity(n));
    CHECK(m1.at("q1") == model::Relation::full(n));
  }
}

TEST_CASE("universe of the k-tuple structure is n^k") {
  harness::Rng rng(19);
  for (int i = 0; i < 30; ++i) {
    const int n = 1 + rng.below(3), k = 1 + rng.below(3);
    const auto m = harness::gen_structure(rng, {"a"}, n);
    long long expected = 1;
    for (int j = 0; j < k; ++j) expected *= n;
    CHECK(model::k_tuple_structure(m, k, {"a"}).universe == expected);
  }
}

TEST_CASE("k-tuple construction guards") {
  model::Structure m = two_elem();
  CHECK_THROWS_AS(model::k_tuple_structure(m, 0, {}), SemanticError);
  CHECK_THROWS_AS(model::k_tuple_structure(m, 2, {"zz"}), SemanticError);
  CHECK_THROWS_AS(model::k_tuple_structure(m, 25, {"a"}), BudgetError);
  model::Structure clash = two_elem();
  clash.add("u", model::Relation(2));
  CHECK_THROWS_AS(model::k_tuple_structure(clash, 2, {"a", "u"}), SemanticError);
}

TEST_CASE("isomorphism by brute force") {
  const auto m = two_elem();
  CHECK(model::is_isomorphic(m, m, {"a", "b"}));

  model::Structure swapped;
  swapped.universe = 2;
  swapped.add("a", from_pairs(2, {{1, 0}}));
  CHECK(model::is_isomorphic(
      [] {
        model::Structure s;
        s.universe = 2;
        s.add("a", from_pairs(2, {{0, 1}}));
        return s;
      }(),
      swapped, {"a"}));

  model::Structure bigger;
  bigger.universe = 2;
  bigger.add("a", from_pairs(2, {{0, 1}, {1, 0}}));
  CHECK_FALSE(model::is_isomorphic(swapped, bigger, {"a"}));

  model::Structure small1, small3;
  small1.universe = 1;
  small3.universe = 3;
  CHECK_FALSE(model::is_isomorphic(small1, small3, {}));

  model::Structure huge;
  huge.universe = 9;
  CHECK_THROWS_AS(model::is_isomorphic(huge, huge, {}), BudgetError);
}

TEST_CASE("isomorphism is an equivalence on a small pool") {
  harness::Rng rng(29);
  std::vector<model::Structure> pool;
  for (int i = 0; i < 6; ++i) pool.push_back(harness::gen_structure(rng, {"a"}, 2));
  for (const auto& x : pool) CHECK(model::is_isomorphic(x, x, {"a"}));
  for (const auto& x : pool)
    for (const auto& y : pool)
      CHECK(model::is_isomorphic(x, y, {"a"}) == model::is_isomorphic(y, x, {"a"}));
  for (const auto& x : pool)
    for (const auto& y : pool)
      for (const auto& z : pool)
        if (model::is_isomorphic(x, y, {"a"}) && model::is_isomorphic(y, z, {"a"}))
          CHECK(model::is_isomorphic(x, z, {"a"}));
}

TEST_CASE("structure enumeration counts") {
  auto count = [](const std::set<std::string>& sig, int size) {
    model::StructureEnumerator en(sig, size);
    long long c = 0;
    while (en.next()) ++c;
    return c;
  };
  CHECK(count({"a"}, 1) == 2);
  CHECK(count({"a"}, 2) == 16);
  CHECK(count({"a", "b"}, 2) == 256);
  CHECK_THROWS_AS(model::StructureEnumerator({"a", "b", "c"}, 3, 1000), BudgetError);
}

TEST_CASE("enumeration streams distinct structures deterministically") {
  model::StructureEnumerator en({"a"}, 2);
  std::set<std::string> seen;
  while (auto m = en.next()) seen.insert(model::structure_to_string(*m));
  CHECK(seen.size() == 16);
}

TEST_CASE("k-tuple membership") {
  const auto mk = model::k_tuple_structure(two_elem(), 2, {"a", "b"});
  CHECK(model::is_k_tuple(mk, 2, {"a", "b"}));

  // deleting one q1 pair breaks the characterization
  model::Structure damaged = mk;
  model::Relation q1 = damaged.at("q1");
  q1.set(0, 2, false);
  damaged.relations.erase("q1");
  damaged.add("q1", std::move(q1));
  CHECK_FALSE(model::is_k_tuple(damaged, 2, {"a", "b"}));

  // universe size 3 is not a square
  model::Structure odd;
  odd.universe = 3;
  CHECK_FALSE(model::is_k_tuple(odd, 2, {}));
}

TEST_CASE("structure JSON round trip and validation") {
  const auto m = two_elem();
  const auto text = model::structure_to_string(m);
  CHECK(model::structure_from_string(text) == m);

  // unknown relation names are permitted and preserved
  const auto loaded = model::structure_from_string(
      R"({"universe": 2, "relations": {"a": [[0,1]], "mystery": [[1,1]]}})");
  CHECK(loaded.has("mystery"));
  CHECK(model::structure_from_string(model::structure_to_string(loaded)) == loaded);

  CHECK_THROWS_AS(model::structure_from_string(R"({"universe": 0, "relations": {}})"),
                  SemanticError);
  CHECK_THROWS_AS(model::structure_from_string(R"({"universe": 2, "relations": {"a": [[0,2]]}})"),
                  SemanticError);
  CHECK_THROWS_AS(model::structure_from_string("{"), ParseError);
  CHECK_THROWS_AS(model::structure_from_string(R"({"universe": 2})"), SemanticError);
}

TEST_CASE("relation algebra on bitsets") {
  const auto r = from_pairs(3, {{0, 1}, {1, 2}});
  const auto s = from_pairs(3, {{1, 0}});
  CHECK(r.compose(s) == from_pairs(3, {{0, 0}}));
  CHECK(r.converse() == from_pairs(3, {{1, 0}, {2, 1}}));
  CHECK(r.intersect(s).empty());
  CHECK(r.unite(s).count() == 3);
  CHECK(r.complemented().count() == 7);
  CHECK(model::Relation::full(3).count() == 9);
  CHECK(model::Relation::identity(3).count() == 3);
}

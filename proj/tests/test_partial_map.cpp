#include <doctest.h>

#include <algorithm>
#include <random>

#include "pia/constructors.hpp"
#include "pia/errors.hpp"
#include "pia/inner.hpp"
#include "pia/partial_map.hpp"

using namespace pia;

TEST_CASE("composition") {
  PartialMap f = PartialMap::from_pairs(2, {{0, 1}});
  PartialMap g = PartialMap::from_pairs(2, {{1, 0}});
  CHECK(compose(f, g) == PartialMap::from_pairs(2, {{0, 0}}));
  CHECK(compose(f, f) == PartialMap::empty(2));
  PartialMap id = PartialMap::identity(2);
  CHECK(compose(id, f) == f);
  CHECK(compose(f, id) == f);
  CHECK_THROWS_AS(compose(f, PartialMap::identity(3)), Error);
}

TEST_CASE("inversion") {
  CHECK(invert(PartialMap::empty(3)) == PartialMap::empty(3));
  CHECK(invert(PartialMap::from_pairs(2, {{0, 1}})) == PartialMap::from_pairs(2, {{1, 0}}));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> perm(6);
    for (int i = 0; i < 6; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 3; ++i) pairs.emplace_back(i, perm[i]);
    PartialMap f = PartialMap::from_pairs(6, pairs);
    CHECK(invert(invert(f)) == f);
    CHECK(compose(f, invert(f)) == PartialMap::identity_on(6, f.domain()));
  }
}

TEST_CASE("containment") {
  PartialMap f = PartialMap::from_pairs(3, {{0, 1}});
  PartialMap g = PartialMap::from_pairs(3, {{0, 1}, {2, 2}});
  CHECK(subset_of(PartialMap::empty(3), g));
  CHECK(subset_of(f, f));
  CHECK(subset_of(f, g));
  CHECK(!subset_of(g, f));
}

TEST_CASE("canonical form is validated") {
  CHECK_THROWS_AS(PartialMap::from_pairs(2, {{0, 0}, {0, 1}}), Error);
  CHECK_THROWS_AS(PartialMap::from_pairs(2, {{0, 0}, {1, 0}}), Error);
  CHECK_THROWS_AS(PartialMap::from_pairs(2, {{0, 2}}), Error);
  PartialMap f = PartialMap::from_pairs(3, {{2, 0}, {0, 2}});
  CHECK(f.pairs.front().first == 0);
}

TEST_CASE("closure") {
  SUBCASE("identity alone") {
    auto cl = closure({PartialMap::identity(3)});
    CHECK(cl == std::vector<PartialMap>({PartialMap::identity(3)}));
  }
  SUBCASE("left-zero generators close to six maps") {
    SemigroupWithOne lz(left_zero(2));
    auto cl = inn(lz);
    CHECK(cl.size() == 6);
  }
  SUBCASE("two-element group closes to identity plus empty") {
    SemigroupWithOne z2(cyclic_group(2));
    auto cl = inn(z2);
    CHECK(cl == std::vector<PartialMap>({PartialMap::empty(2), PartialMap::identity(2)}));
  }
  SUBCASE("order independent") {
    SemigroupWithOne lz(left_zero(3));
    auto gens = inn_generators(lz).maps;
    auto sorted_result = closure(gens);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(gens.begin(), gens.end(), rng);
      CHECK(closure(gens) == sorted_result);
    }
  }
  SUBCASE("limit enforced") {
    SemigroupWithOne lz(left_zero(3));
    CHECK_THROWS_AS(closure(inn_generators(lz).maps, 4), Error);
  }
  SUBCASE("closures are inverse monoids") {
    for (int k : {2, 3}) {
      SemigroupWithOne lz(left_zero(k));
      auto cl = inn(lz);
      for (const auto& x : cl) {
        int count = 0;
        for (const auto& y : cl)
          if (compose(compose(x, y), x) == x && compose(compose(y, x), y) == y) {
            ++count;
            CHECK(y == invert(x));
          }
        CHECK(count == 1);
      }
      // idempotents commute
      for (const auto& x : cl)
        for (const auto& y : cl)
          if (compose(x, x) == x && compose(y, y) == y) CHECK(compose(x, y) == compose(y, x));
    }
  }
}

TEST_CASE("abstract cayley table") {
  SUBCASE("identity plus empty is the two-chain") {
    auto table = abstract_cayley({PartialMap::identity(2), PartialMap::empty(2)});
    CHECK(table == chain_semilattice(2));
  }
  SUBCASE("closure output validates") {
    SemigroupWithOne lz(left_zero(2));
    auto table = abstract_cayley(inn(lz));
    CHECK(table.n == 6);
  }
  SUBCASE("singleton identity") {
    auto table = abstract_cayley({PartialMap::identity(4)});
    CHECK(table.n == 1);
    CHECK(table.identity == 0);
  }
  SUBCASE("not closed is rejected") {
    CHECK_THROWS_AS(abstract_cayley({PartialMap::from_pairs(2, {{0, 1}})}), Error);
  }
}

TEST_CASE("composition is associative on random triples") {
  std::mt19937 rng(5);
  auto random_map = [&]() {
    std::vector<int> targets{0, 1, 2, 3, 4};
    std::shuffle(targets.begin(), targets.end(), rng);
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < 5; ++x)
      if (rng() % 2) pairs.emplace_back(x, targets[x]);
    return PartialMap::from_pairs(5, pairs);
  };
  for (int trial = 0; trial < 50; ++trial) {
    PartialMap a = random_map(), b = random_map(), c = random_map();
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("text form") {
  CHECK(to_string(PartialMap::empty(3)) == "{}");
  CHECK(to_string(PartialMap::from_pairs(3, {{2, 0}, {0, 1}})) == "{0->1, 2->0}");
}

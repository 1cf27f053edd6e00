#include <doctest.h>

#include "pia/constructors.hpp"
#include "pia/inner.hpp"

using namespace pia;

TEST_CASE("domains") {
  SemigroupWithOne c8(clifford8());
  CHECK(domain_dgh(c8, 5, 5) == std::vector<int>({0, 1, 2, 3, 4, 5}));

  SemigroupWithOne s4(strict4());
  CHECK(domain_dgh(s4, 0, 2).empty());
  CHECK(domain_dgh(s4, 0, 1) == std::vector<int>({0, 3}));
}

TEST_CASE("phi maps") {
  SemigroupWithOne c8(clifford8());
  InnGenerator g = phi(c8, 5, 5);
  CHECK(g.map.apply(3) == 4);
  CHECK(g.map.apply(4) == 3);

  SemigroupWithOne s4(strict4());
  CHECK(phi(s4, 0, 1).map == PartialMap::from_pairs(4, {{0, 1}, {3, 2}}));

  SemigroupWithOne lz(left_zero(2));
  CHECK(phi(lz, lz.one, lz.one).map == PartialMap::identity(2));
  // the map from {g} to {h}
  CHECK(phi(lz, 0, 1).map == PartialMap::from_pairs(2, {{0, 1}}));
}

TEST_CASE("inn sizes") {
  CHECK(inn(SemigroupWithOne(cyclic_group(2))).size() == 2);
  CHECK(inn(SemigroupWithOne(cyclic_group(3))).size() == 2);
  CHECK(inn(SemigroupWithOne(symmetric_group(3))).size() == 7);
  CHECK(inn(SemigroupWithOne(left_zero(3))).size() == 11);
  CHECK(inn(SemigroupWithOne(full_transformation_monoid(2).first)).size() == 7);
}

TEST_CASE("conjugator reduction") {
  SUBCASE("strictness example") {
    SemigroupWithOne s(strict4());
    auto [gb, hb] = reduce_conjugators(s, 0, 2);
    CHECK(gb == 0);
    CHECK(hb == 1);
    CHECK(phi(s, 0, 2).map == PartialMap::empty(4));
    CHECK(subset_of(phi(s, 0, 2).map, phi(s, gb, hb).map));
    CHECK(!(phi(s, 0, 2).map == phi(s, gb, hb).map));
  }
  SUBCASE("identity pair is fixed") {
    SemigroupWithOne c8(clifford8());
    auto [gb, hb] = reduce_conjugators(c8, 6, 6);
    CHECK(gb == 6);
    CHECK(hb == 6);
  }
  SUBCASE("group inverse pairs are fixed") {
    SemigroupWithOne z4(cyclic_group(4));
    auto [gb, hb] = reduce_conjugators(z4, 1, 3);
    CHECK(gb == 1);
    CHECK(hb == 3);
  }
}

TEST_CASE("generator provenance deduplicates") {
  SemigroupWithOne z2(cyclic_group(2));
  InnGenerators gens = inn_generators(z2);
  CHECK(gens.maps.size() == 2);
  // identity map arises from (0,0) and (1,1); empty map from the mixed pairs
  for (size_t i = 0; i < gens.maps.size(); ++i)
    CHECK(gens.provenance[i].size() == 2);
}

TEST_CASE("composition inclusion can be strict") {
  SemigroupWithOne z2(cyclic_group(2));
  PartialMap twice = compose(phi(z2, 0, 1).map, phi(z2, 0, 1).map);
  CHECK(twice == PartialMap::empty(2));
  CHECK(phi(z2, 0, 0).map == PartialMap::identity(2));
  CHECK(subset_of(twice, phi(z2, 0, 0).map));
}

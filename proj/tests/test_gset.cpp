#include <doctest.h>

#include "pia/errors.hpp"
#include "pia/gset.hpp"

using namespace pia;

TEST_CASE("construction validates the action") {
  CHECK_THROWS_AS(make_gset(symmetric_group(3), 1, std::vector<int>(6, 0)), Error);
  CHECK_THROWS_AS(make_gset(cyclic_group(2), 4, {1, 0, 2, 3, 0, 1, 2, 3}), Error);
  CHECK_THROWS_AS(make_gset(left_zero(2), 2, {0, 1, 0, 1}), Error);

  GSet gs = z2_swap_gset();
  CHECK(gs.orbits == Partition::from_blocks(4, {{0, 1}, {2}, {3}}));
  CHECK(gs.point_stab[0] == std::vector<int>({0}));
  CHECK(gs.point_stab[2] == std::vector<int>({0, 1}));
}

TEST_CASE("equivariant endomorphisms") {
  GSet gs = z2_swap_gset();
  EndGData end = end_g(gs);
  CHECK(end.maps.size() == 16);
  CHECK(end.monoid.identity.has_value());
  for (const auto& f : end.maps)
    for (int k = 0; k < 2; ++k)
      for (int x = 0; x < 4; ++x) CHECK(f[gs.act(k, x)] == gs.act(k, f[x]));
  CHECK(end.index_of({0, 1, 2, 3}) >= 0);
  CHECK(end.index_of({2, 2, 2, 2}) >= 0);
  CHECK(end.index_of({0, 0, 0, 0}) == -1); // not equivariant: 2 must go to a fixed point
}

TEST_CASE("stabilizer machinery") {
  GSet gs = z2_swap_gset();
  Partition p = Partition::from_blocks(4, {{0, 1}, {2}, {3}});
  std::vector<int> i = {2, 3};
  StabilizerData sd = stabilizers(gs, p, i);
  CHECK(sd.block_setwise[0] == std::vector<int>({0, 1}));
  REQUIRE(sd.block_max[0].has_value());
  CHECK(*sd.block_max[0] == std::vector<int>({0}));
  CHECK(sd.block_gprime[0] == std::vector<int>({0, 1}));
  CHECK(subgroup_generated(gs.group, {1}) == std::vector<int>({0, 1}));
  CHECK(subgroup_leq({0}, {0, 1}));
  CHECK(!subgroup_leq({0, 1}, {0}));
}

TEST_CASE("tau descriptors") {
  GSet gs = z2_swap_gset();
  std::vector<int> id = {0, 1, 2, 3};
  std::vector<int> h = {0, 1, 2, 2}; // folds the second fixed point onto the first
  auto [sp1, sp2] = tau_descriptor(gs, id, h);
  CHECK(sp1.i == std::vector<int>({0, 1, 2}));
  CHECK(sp1.p == Partition::from_blocks(4, {{0}, {1}, {2, 3}}));
  auto conds = tau_conditions(gs, sp1.p, sp1.i);
  CHECK(conds[0]);
  CHECK(conds[1]);
  CHECK(conds[2]);
  CHECK(conds[3]);
}

TEST_CASE("standardization") {
  GSet gs = z2_swap_gset();
  SUBCASE("merging swap translates") {
    StandardPair sp = standardize(gs, Partition::singletons(4), {2, 3});
    CHECK(sp.p == Partition::from_blocks(4, {{0, 1}, {2}, {3}}));
    CHECK(sp.i == std::vector<int>({2, 3}));
    CHECK(sp.is_accessible);
    StandardPair again = standardize(gs, sp.p, sp.i);
    CHECK(again == sp);
  }
  SUBCASE("inaccessible collapses") {
    StandardPair sp = standardize(gs, Partition::from_blocks(4, {{0, 1}, {2}, {3}}), {0, 1});
    CHECK(sp.p == Partition::whole(4));
    CHECK(sp.i.empty());
    CHECK(!sp.is_accessible);
  }
  SUBCASE("already standard is fixed") {
    Partition p = Partition::from_blocks(4, {{0}, {1}, {2}, {3}});
    StandardPair sp = standardize(gs, p, {0, 1, 2, 3});
    CHECK(sp.p == p);
  }
}

TEST_CASE("validity of standard pairs") {
  SUBCASE("two full-stabilizer points allow the empty pair") {
    GSet gs = z2_swap_gset();
    StandardPair sp = standardize(gs, Partition::whole(4), {});
    CHECK(is_valid_standard_pair(gs, sp));
  }
  SUBCASE("a unique full-stabilizer point forbids it") {
    GSet gs = make_gset(cyclic_group(2), 3, {0, 1, 2, 1, 0, 2});
    StandardPair sp = standardize(gs, Partition::whole(3), {});
    CHECK(!is_valid_standard_pair(gs, sp));
  }
}

TEST_CASE("tau generator tuples") {
  GSet gs = z2_swap_gset();
  std::vector<int> id = {0, 1, 2, 3};
  GeneratorTuple t = tau_generator_tuple(gs, id, id);
  CHECK(t.p == Partition::singletons(4));
  CHECK(t.i == std::vector<int>({0, 1, 2, 3}));
  CHECK(t.alpha == PartialMap::identity(4));
}

TEST_CASE("pair calculus with the action") {
  GSet gs = z2_swap_gset();
  std::vector<int> id = {0, 1, 2, 3};
  WElement wid = gw_normalize(gs, w_of_tuple(tau_generator_tuple(gs, id, id)));
  CHECK(gw_compose(gs, wid, wid) == wid);
  CHECK(gw_invert(gs, wid) == wid);
  SUBCASE("trivial group collapses to the plain calculus") {
    GSet triv = trivial_gset(3);
    WElement a = w_identity(3);
    WElement b{3, PartialMap::from_pairs(3, {{0, 0}}),
               PartitionBijection::identity(Partition::whole(3))};
    CHECK(gw_compose(triv, a, b) == w_compose(a, b));
    CHECK(gw_compose(triv, b, b) == w_compose(b, b));
  }
}

TEST_CASE("further action shapes") {
  SUBCASE("two swapped pairs have no fully fixed point") {
    GSet gs = z2_two_swaps_gset();
    CHECK(end_g(gs).maps.size() == 16); // each free orbit representative picks any target
    StandardPair sp = standardize(gs, Partition::whole(4), {});
    CHECK(is_valid_standard_pair(gs, sp)); // zero fully fixed points, not exactly one
  }
  SUBCASE("folded order-four action has a chain of stabilizers") {
    GSet gs = z4_folded_gset();
    CHECK(gs.point_stab[0] == std::vector<int>({0, 2}));
    CHECK(gs.point_stab[2] == std::vector<int>({0, 1, 2, 3}));
    EndGData end = end_g(gs);
    CHECK(end.monoid.identity.has_value());
  }
}

TEST_CASE("endomorphism domains") {
  GSet gs = z2_swap_gset();
  EndGData end = end_g(gs);
  // image inside {2,3}, kernel below the swap blocks
  Partition p = Partition::from_blocks(4, {{0, 1}, {2}, {3}});
  auto dom = endg_domain(gs, end, p, {2, 3});
  CHECK(dom.size() == 8); // three blocks, two targets each
}

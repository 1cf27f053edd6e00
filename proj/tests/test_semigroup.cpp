#include <doctest.h>

#include "pia/constructors.hpp"
#include "pia/errors.hpp"
#include "pia/green.hpp"
#include "pia/semigroup.hpp"

using namespace pia;

TEST_CASE("validate accepts and rejects") {
  FiniteSemigroup trivial = validate(1, {0});
  CHECK(trivial.identity == 0);

  FiniteSemigroup lz = validate(2, {0, 0, 1, 1});
  CHECK(!lz.identity);

  FiniteSemigroup semilattice = validate(2, {0, 1, 1, 1});
  CHECK(semilattice.identity == 0);

  CHECK_THROWS_WITH_AS(validate(2, {1, 0, 0, 0}), "not associative at (0,0,1)", Error);
  CHECK_THROWS_AS(validate(2, {0, 2, 1, 1}), Error);
  CHECK_THROWS_AS(validate(2, {0, 0, 1}), Error);
}

TEST_CASE("adjoining an identity") {
  FiniteSemigroup lz = left_zero(2);
  FiniteSemigroup m = adjoin_identity(lz);
  CHECK(m.n == 3);
  CHECK(m.identity == 2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(m.at(a, b) == lz.at(a, b));

  CHECK(adjoin_identity(cyclic_group(2)) == cyclic_group(2));
  CHECK(adjoin_identity(clifford8()) == clifford8());
  CHECK(*clifford8().identity == 6);
}

TEST_CASE("idempotents") {
  CHECK(idempotents(clifford8()) == std::vector<int>({0, 6}));
  CHECK(idempotents(cyclic_group(5)) == std::vector<int>({0}));
  CHECK(idempotents(left_zero(3)) == std::vector<int>({0, 1, 2}));
}

TEST_CASE("green relations") {
  SUBCASE("groups have a single class") {
    GreenData g = green(cyclic_group(4));
    CHECK(g.l.size() == 1);
    CHECK(g.r.size() == 1);
    CHECK(g.h.size() == 1);
    CHECK(g.d.size() == 1);
    CHECK(g.group_h == std::vector<bool>{true});
  }
  SUBCASE("left zero: one L class, singleton R classes") {
    GreenData g = green(left_zero(2));
    CHECK(g.l == Partition::whole(2));
    CHECK(g.r == Partition::singletons(2));
    CHECK(g.h == Partition::singletons(2));
    CHECK(g.d == Partition::whole(2));
  }
  SUBCASE("the eight-element example splits into two D classes") {
    GreenData g = green(clifford8());
    CHECK(g.d == Partition::from_blocks(8, {{0, 1, 2, 3, 4, 5}, {6, 7}}));
    CHECK(g.d == g.j);
  }
}

TEST_CASE("orders") {
  SUBCASE("natural order on a group is equality") {
    FiniteSemigroup z3 = cyclic_group(3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(natural_leq(z3, a, b) == (a == b));
  }
  SUBCASE("zero is below everything") {
    FiniteSemigroup nul = null_semigroup(4);
    for (int b = 0; b < 4; ++b) CHECK(natural_leq(nul, 0, b));
  }
  SUBCASE("reflexive") {
    FiniteSemigroup s = strict4();
    for (int a = 0; a < 4; ++a) {
      CHECK(natural_leq(s, a, a));
      CHECK(h_preorder_leq(s, a, a));
    }
  }
  SUBCASE("left zero points are incomparable") {
    FiniteSemigroup lz = left_zero(2);
    CHECK(!h_preorder_leq(lz, 0, 1));
    CHECK(!h_preorder_leq(lz, 1, 0));
  }
}

TEST_CASE("omega data") {
  SUBCASE("idempotent") {
    FiniteSemigroup c8 = clifford8();
    OmegaData w = omega_data(c8, 6);
    CHECK(w.omega == 6);
    CHECK(w.omega_plus_one == 6);
    CHECK(w.pseudo_inverse == 6);
  }
  SUBCASE("element 4 of the strictness table") {
    OmegaData w = omega_data(strict4(), 3);
    CHECK(w.omega == 0);
    CHECK(w.omega_plus_one == 3);
    CHECK(w.pseudo_inverse == 3);
  }
  SUBCASE("group element") {
    OmegaData w = omega_data(cyclic_group(4), 1);
    CHECK(w.omega == 0);
    CHECK(w.omega_plus_one == 1);
    CHECK(w.pseudo_inverse == 3);
  }
}

TEST_CASE("pseudo-inverse shift identity") {
  for (const FiniteSemigroup& s : {clifford8(), strict4(), left_zero(3)}) {
    for (int u = 0; u < s.n; ++u)
      for (int v = 0; v < s.n; ++v) {
        int uv = s.at(u, v), vu = s.at(v, u);
        CHECK(s.at(omega_data(s, uv).pseudo_inverse, u) ==
              s.at(u, omega_data(s, vu).pseudo_inverse));
      }
  }
}

TEST_CASE("monoidization context") {
  SemigroupWithOne lz(left_zero(2));
  CHECK(lz.adjoined);
  CHECK(lz.one == 2);
  CHECK(lz.scan_order() == std::vector<int>({2, 0, 1}));

  SemigroupWithOne c8(clifford8());
  CHECK(!c8.adjoined);
  CHECK(c8.one == 6);
  CHECK(c8.scan_order().front() == 6);
}

TEST_CASE("inverse vectors and centralizers") {
  CHECK(inverse_vector(clifford8()).has_value());
  CHECK(!inverse_vector(left_zero(2)).has_value());
  CHECK(centralizer(clifford8(), 3) == std::vector<int>({0, 3, 6, 7}));
  CHECK(centralizer(clifford8(), 4) == std::vector<int>({0, 4, 6}));
}

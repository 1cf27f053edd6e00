#include <doctest.h>

#include "pia/constructors.hpp"
#include "pia/errors.hpp"
#include "pia/green.hpp"
#include "pia/verify.hpp"

using namespace pia;

TEST_CASE("fixed example tables match the printed entries") {
  FiniteSemigroup c8 = clifford8();
  CHECK(c8.at(7, 7) == 6);  // c * c = f
  CHECK(c8.at(5, 3) == 1);  // s3 * s1 = r1
  CHECK(c8.at(0, 6) == 0);  // e * f = e
  CHECK(c8.label(7) == "c");

  FiniteSemigroup s4 = strict4();
  CHECK(s4.at(2, 2) == 1);  // row 3, column 3 = 2
  CHECK(s4.at(0, 2) == 3);  // row 1, column 3 = 4
}

TEST_CASE("left zero and families") {
  FiniteSemigroup lz = left_zero(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(lz.at(a, b) == a);
  CHECK(cyclic_group(4).at(2, 3) == 1);
  CHECK(*chain_semilattice(3).identity == 2);
  CHECK(null_semigroup(3).at(1, 2) == 0);
  CHECK(symmetric_group(3).n == 6);
}

TEST_CASE("rees matrix semigroups") {
  SUBCASE("one by one over a group is the group") {
    ReesSpec spec = make_rees_spec(cyclic_group(3), 1, 1, {{0}});
    CHECK(tables_isomorphic(rees_matrix(spec), cyclic_group(3)));
  }
  SUBCASE("trivial group gives a rectangular band") {
    ReesSpec spec = make_rees_spec(cyclic_group(1), 2, 2, {{0, 0}, {0, 0}});
    FiniteSemigroup band = rees_matrix(spec);
    CHECK(band.n == 4);
    for (int a = 0; a < 4; ++a) CHECK(band.at(a, a) == a);
  }
  SUBCASE("the order-two group example validates and is simple") {
    ReesSpec spec = make_rees_spec(cyclic_group(2), 2, 2, {{0, 0}, {0, 1}});
    FiniteSemigroup s = rees_matrix(spec);
    CHECK(s.n == 8);
    CHECK(green(s).d.size() == 1);
  }
  SUBCASE("codec round trips") {
    ReesSpec spec = make_rees_spec(cyclic_group(2), 2, 3, {{0, 0}, {0, 1}, {1, 1}});
    for (int code = 0; code < spec.carrier_size(); ++code) {
      auto t = spec.decode(code);
      CHECK(spec.encode(t.i, t.gamma, t.lambda) == code);
    }
  }
  SUBCASE("emptiness rule with a trivial group is always satisfied") {
    ReesSpec spec = make_rees_spec(cyclic_group(1), 2, 2, {{0, 0}, {0, 0}});
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        CHECK(rees_domain_nonempty(spec, spec.decode(a), spec.decode(b)));
  }
  SUBCASE("non-groups are rejected") {
    CHECK_THROWS_AS(make_rees_spec(left_zero(2), 1, 1, {{0}}), Error);
    CHECK_THROWS_AS(make_rees_spec(chain_semilattice(2), 1, 1, {{0}}), Error);
  }
}

TEST_CASE("full transformation monoids") {
  SUBCASE("tiny cases") {
    CHECK(full_transformation_monoid(1).first.n == 1);
    auto [t2, c2] = full_transformation_monoid(2);
    CHECK(t2.n == 4);
    CHECK(*t2.identity == c2.encode({0, 1}));
  }
  SUBCASE("order three") {
    auto [t3, c3] = full_transformation_monoid(3);
    CHECK(t3.n == 27);
    REQUIRE(t3.identity);
    int units = 0;
    for (int a = 0; a < 27; ++a)
      for (int b = 0; b < 27; ++b)
        if (t3.at(a, b) == *t3.identity && t3.at(b, a) == *t3.identity) {
          ++units;
          break;
        }
    CHECK(units == 6);
  }
  SUBCASE("codec round trips and composes left to right") {
    auto [t3, c3] = full_transformation_monoid(3);
    for (int code = 0; code < 27; ++code) CHECK(c3.encode(c3.decode(code)) == code);
    std::vector<int> f = {1, 2, 0}, g = {0, 0, 1};
    std::vector<int> fg(3);
    for (int x = 0; x < 3; ++x) fg[x] = g[f[x]];
    CHECK(t3.at(c3.encode(f), c3.encode(g)) == c3.encode(fg));
  }
  SUBCASE("size cap") { CHECK_THROWS_AS(full_transformation_monoid(5), Error); }
}

TEST_CASE("symmetric inverse monoids") {
  auto [i1, maps1] = symmetric_inverse_monoid(1);
  CHECK(i1.n == 2);
  auto [i2, maps2] = symmetric_inverse_monoid(2);
  CHECK(i2.n == 7);
  CHECK(i2.identity.has_value());
  CHECK(maps2.size() == 7);
}

TEST_CASE("catalog lookup") {
  CHECK(catalog_lookup("clifford8")->n == 8);
  CHECK(catalog_lookup("strict4")->n == 4);
  CHECK(catalog_lookup("leftzero:3")->n == 3);
  CHECK(catalog_lookup("cyclic:5")->n == 5);
  CHECK(catalog_lookup("T:2")->n == 4);
  CHECK(catalog_lookup("I:2")->n == 7);
  CHECK(!catalog_lookup("nonsense"));
  CHECK(!catalog_lookup("leftzero:"));
  CHECK(!catalog_lookup("cyclic:x"));
}

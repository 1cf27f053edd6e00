#include <doctest.h>

#include <set>

#include "pia/conjugacy.hpp"
#include "pia/constructors.hpp"

using namespace pia;

TEST_CASE("witness search") {
  SemigroupWithOne c8(clifford8());
  SUBCASE("identical elements get identity conjugators") {
    for (int a = 0; a < 8; ++a) {
      auto w = conjugators(c8, a, a);
      REQUIRE(w);
      CHECK(w->g == 6);
      CHECK(w->h == 6);
    }
  }
  SUBCASE("the two reflections are conjugate") {
    auto w = conjugators(c8, 3, 4);
    REQUIRE(w);
    // deterministic first witness in identity-first scan order
    CHECK(w->g == 2);
    CHECK(w->h == 1);
    for (int k = 0; k < 8; ++k) CHECK(conjugation_condition(c8.s1, k, 3, 4, w->g, w->h));
  }
  SUBCASE("the paper's witness pair also works") {
    auto k = k_pairs(c8, 5, 5);
    CHECK(std::find(k.begin(), k.end(), std::make_pair(3, 4)) != k.end());
  }
  SUBCASE("c is conjugate to nothing else") {
    for (int b = 0; b < 7; ++b) CHECK(!conjugators(c8, 7, b));
  }
}

TEST_CASE("conjugacy classes") {
  SUBCASE("eight-element example") {
    SemigroupWithOne c8(clifford8());
    CHECK(conjugacy_classes(c8) ==
          Partition::from_blocks(8, {{0}, {1, 2}, {3, 4, 5}, {6}, {7}}));
  }
  SUBCASE("zero class is a singleton") {
    SemigroupWithOne nul(null_semigroup(4));
    Partition cls = conjugacy_classes(nul);
    CHECK(cls.blocks[cls.block_of(0)] == std::vector<int>({0}));
  }
  SUBCASE("class of the identity in a monoid") {
    auto [i2, maps] = symmetric_inverse_monoid(2);
    SemigroupWithOne s(i2);
    Partition cls = conjugacy_classes(s);
    int one = *i2.identity;
    std::set<int> expected;
    for (int g = 0; g < i2.n; ++g)
      for (int h = 0; h < i2.n; ++h)
        if (i2.at(h, g) == one) expected.insert(i2.at(g, h));
    const auto& block = cls.blocks[cls.block_of(one)];
    CHECK(std::set<int>(block.begin(), block.end()) == expected);
  }
  SUBCASE("groups use ordinary conjugacy") {
    SemigroupWithOne s3(symmetric_group(3));
    Partition cls = conjugacy_classes(s3);
    CHECK(cls.size() == 3); // identity, transpositions, three-cycles
  }
}

TEST_CASE("four-condition sets must pair the absorption sides correctly") {
  // On the null semigroup {0,1} with a=0, b=1, g=h=0, the conditions
  // ag=gb, bh=ha, gh.a=a and a.gh=a all hold while hag != b, so that
  // condition set cannot force conjugacy; pairing gh.a=a with b.hg=b does.
  SemigroupWithOne s(null_semigroup(2));
  int a = 0, b = 1, g = 0, h = 0;
  CHECK(conjugation_condition(s.s1, 0, a, b, g, h));
  CHECK(conjugation_condition(s.s1, 1, a, b, g, h));
  CHECK(conjugation_condition(s.s1, 5, a, b, g, h));
  CHECK(conjugation_condition(s.s1, 7, a, b, g, h));
  CHECK(!conjugation_condition(s.s1, 2, a, b, g, h));
  CHECK(!conjugators(s, 0, 1).has_value());
}

TEST_CASE("conjugator pair sets") {
  SemigroupWithOne c8(clifford8());
  SUBCASE("identity pair set is the diagonal") {
    auto k = k_pairs(c8, 6, 6);
    CHECK(k.size() == 8);
    for (auto [a, b] : k) CHECK(a == b);
  }
  SUBCASE("closed under componentwise products") {
    for (int g = 0; g < c8.s1.n; ++g)
      for (int h = 0; h < c8.s1.n; ++h) {
        auto k = k_pairs(c8, g, h);
        std::set<std::pair<int, int>> kset(k.begin(), k.end());
        for (auto p : k)
          for (auto q : k)
            CHECK(kset.count({c8.base.at(p.first, q.first), c8.base.at(p.second, q.second)}));
      }
  }
  SUBCASE("pairs are exactly domain elements with forced images") {
    for (int g = 0; g < c8.s1.n; ++g)
      for (int h = 0; h < c8.s1.n; ++h) {
        auto k = k_pairs(c8, g, h);
        std::set<std::pair<int, int>> kset(k.begin(), k.end());
        int gh = c8.s1.at(g, h);
        std::set<std::pair<int, int>> expected;
        for (int a = 0; a < 8; ++a)
          if (c8.s1.at(gh, a) == a && c8.s1.at(a, gh) == a)
            expected.insert({a, c8.s1.at(c8.s1.at(h, a), g)});
        CHECK(kset == expected);
      }
  }
}

#include <doctest.h>

#include "pia/verify.hpp"

using namespace pia;

TEST_CASE("corpus generation is deterministic") {
  auto a = random_corpus(3);
  auto b = random_corpus(3);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].s == b[i].s);
  // every binary operation on up to three points that is associative
  int order3 = 0;
  for (const auto& e : a) order3 += e.s.n == 3;
  CHECK(order3 == 113);
  int order2 = 0;
  for (const auto& e : a) order2 += e.s.n == 2;
  CHECK(order2 == 8);
}

TEST_CASE("isomorphism search") {
  CHECK(tables_isomorphic(cyclic_group(4), cyclic_group(4)));
  CHECK(!tables_isomorphic(cyclic_group(4), chain_semilattice(4)));
  // relabeled copy
  FiniteSemigroup z3 = cyclic_group(3);
  std::vector<int> perm = {2, 0, 1};
  std::vector<int> table(9);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) table[perm[a] * 3 + perm[b]] = perm[z3.at(a, b)];
  CHECK(tables_isomorphic(z3, validate(3, table)));
  CHECK(!tables_isomorphic(cyclic_group(2), cyclic_group(3)));
}

TEST_CASE("suites pass on the shipped corpus") {
  SUBCASE("conjugacy on small entries") {
    auto corpus = random_corpus(2);
    SuiteReport rep = verify_conjugacy_suite(corpus);
    CHECK(rep.failures() == 0);
  }
  SUBCASE("inner on small entries") {
    auto corpus = random_corpus(2);
    SuiteReport rep = verify_inner_suite(corpus, 3);
    CHECK(rep.failures() == 0);
  }
  SUBCASE("rees examples") {
    for (const auto& [name, spec] : default_rees_examples())
      CHECK(verify_rees_suite(name, spec).failures() == 0);
  }
  SUBCASE("transformation structure order two") {
    CHECK(verify_tx_suite(2, true).failures() == 0);
  }
  SUBCASE("examples") { CHECK(verify_examples_suite().failures() == 0); }
}

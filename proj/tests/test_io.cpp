#include <doctest.h>

#include "pia/errors.hpp"
#include "pia/io.hpp"

using namespace pia;

TEST_CASE("cayley table round trip") {
  CHECK(parse_table("1\n0\n").identity == 0);
  FiniteSemigroup lz = parse_table("2\n0 0\n1 1\n");
  CHECK(lz == left_zero(2));

  FiniteSemigroup c8 = clifford8();
  CHECK(parse_table(format_table(c8)) == c8);
  CHECK(parse_table(format_table(c8)).labels == c8.labels);
}

TEST_CASE("parse errors name the line") {
  CHECK_THROWS_WITH_AS(parse_table("2\n0 0\n1\n"), "line 3: expected 2 entries, found 1", Error);
  CHECK_THROWS_AS(parse_table("2\n0 0\n1 x\n"), Error);
  CHECK_THROWS_AS(parse_table(""), Error);
  CHECK_THROWS_AS(parse_table("2\n0 0\n1 1\nextra\n"), Error);
  CHECK_THROWS_AS(parse_table("1\n0\n# labels: a b\n"), Error);
}

TEST_CASE("gset files") {
  GSet gs = z2_swap_gset();
  GSet parsed = parse_gset(format_gset(gs));
  CHECK(parsed.group == gs.group);
  CHECK(parsed.x_size == gs.x_size);
  CHECK(parsed.action == gs.action);
  CHECK_THROWS_AS(parse_gset("2\n0 1\n1 0\n\n3\n0 1 2\n"), Error); // missing action row
}

TEST_CASE("rees files") {
  ReesSpec spec = make_rees_spec(cyclic_group(2), 2, 2, {{0, 0}, {0, 1}});
  ReesSpec parsed = parse_rees(format_rees(spec));
  CHECK(parsed.group == spec.group);
  CHECK(parsed.i_size == spec.i_size);
  CHECK(parsed.lambda_size == spec.lambda_size);
  CHECK(parsed.sandwich == spec.sandwich);
  CHECK(rees_matrix(parsed) == rees_matrix(spec));
}

TEST_CASE("name or table") {
  CHECK(semigroup_from_name_or_table("clifford8").n == 8);
  CHECK(semigroup_from_name_or_table("2\n0 0\n1 1\n") == left_zero(2));
}

TEST_CASE("emission is deterministic") {
  Report r;
  r.command = "conj clifford8";
  r.digest = input_digest("x");
  r.add("classes", "0 | 1 2");
  r.add("empty-map", "{}");
  std::string t1 = emit_text(r);
  std::string t2 = emit_text(r);
  CHECK(t1 == t2);
  CHECK(t1.find("classes: 0 | 1 2") != std::string::npos);
  std::string j1 = emit_json(r);
  CHECK(j1 == emit_json(r));
  CHECK(j1.find("\"classes\"") != std::string::npos);
  CHECK(input_digest("x") == input_digest("x"));
  CHECK(input_digest("x") != input_digest("y"));
}

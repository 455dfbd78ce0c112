#include "doctest.h"
#include "lforge/io.hpp"

using namespace lforge;

TEST_CASE("algebra specs") {
  auto spec = parse_algebra_spec(R"({"dimension": 2, "generators": ["x1^2 + x2^2", "x1^2 - x2^2"], "degree_cap": 6})");
  CHECK(spec.dimension == 2);
  CHECK(spec.generators.size() == 2);
  CHECK(spec.degree_cap == 6u);
  CHECK(!parse_algebra_spec(R"({"dimension": 1, "generators": ["x1"]})").degree_cap);

  CHECK_THROWS_AS(parse_algebra_spec("{"), InputError);
  CHECK_THROWS_AS(parse_algebra_spec(R"({"generators": ["x1"]})"), InputError);
  CHECK_THROWS_AS(parse_algebra_spec(R"({"dimension": 1, "generators": ["x2"]})"), InputError);
  CHECK_THROWS_AS(parse_algebra_spec(R"({"dimension": 1, "generators": ["x1 +"]})"), InputError);
  CHECK_THROWS_AS(parse_algebra_spec(R"({"dimension": 0, "generators": []})"), InputError);
}

TEST_CASE("group specs") {
  auto g = parse_group_spec(R"({"dimension": 2, "matrices": [[[1, 0], [0, 1]], [[-1, 0], [0, -1]]]})");
  CHECK(g.order() == 2);
  // rotation by an angle with rational cosine 3/5 has infinite order
  CHECK_THROWS_AS(parse_group_spec(R"({"dimension": 2, "matrices": [[[1, 0], [0, 1]],
                                    [["3/5", "-4/5"], ["4/5", "3/5"]]]})"),
                  GroupError);
  auto quarter = parse_group_spec(R"({"dimension": 2, "matrices": [[[1, 0], [0, 1]], [[0, -1], [1, 0]],
                                        [["-1", 0], [0, "-1"]], [[0, 1], [-1, 0]]]})");
  CHECK(quarter.order() == 4);
  CHECK(parse_group_spec(R"j({"builtin": "signed_permutations(2)"})j").order() == 8);
  CHECK_THROWS_AS(parse_group_spec(R"({"dimension": 2, "matrices": [[[1, 0]]]})"), Error);
  CHECK_THROWS_AS(parse_group_spec(R"({"dimension": 2, "matrices": [[["a", 0], [0, 1]]]})"), InputError);
  CHECK_THROWS_AS(parse_group_spec(R"j({"builtin": "nope(2)"})j"), InputError);
}

TEST_CASE("builtins") {
  auto d3 = parse_builtin("dihedral:3");
  CHECK(d3.group.order() == 6);
  REQUIRE(d3.closed_form);
  CHECK(d3.closed_form->generators() ==
        std::vector<Polynomial>{r_squared(2), parse_polynomial("x1^3 - 3*x1*x2^2", 2)});
  CHECK(parse_builtin("dihedral(3)").group.order() == 6);
  CHECK(parse_builtin("neg_id(3)").group.order() == 2);
  CHECK(parse_builtin("cyclic_sign:2:2").group.order() == 2);
  CHECK(!parse_builtin("neg_id:2").closed_form);
  CHECK_THROWS_AS(parse_builtin("dihedral"), InputError);
  CHECK_THROWS_AS(parse_builtin("dihedral:0"), InputError);
  CHECK_THROWS_AS(parse_builtin("signed_permutations:9"), InputError);
  CHECK_THROWS_AS(parse_builtin("cyclic_sign:2:3"), InputError);
}

TEST_CASE("polynomial lists") {
  auto ps = parse_polynomials({"x1", "x2^2 - 1/3"}, 2);
  CHECK(ps.size() == 2);
  CHECK_THROWS_AS(parse_polynomials({"x1 ** 2"}, 2), InputError);
  CHECK_THROWS_AS(read_file("/nonexistent/lforge.json"), InputError);
}

#include <doctest.h>

#include "peakval/golden.hpp"
#include "peakval/json_io.hpp"

using namespace peakval;

TEST_CASE("bare keys are accepted") {
  Json j = parse_json("{shape:[9,9,9,9,6,6,4,4,4], word:[6,9,7,8,5,1,3,4,2]}");
  Transversal t = transversal_from_json(j);
  CHECK(t.word().front() == 6);
  CHECK(parse_json(R"({"a": "x:y, b"})")["a"] == "x:y, b");
  CHECK_THROWS_AS(parse_json("{shape:"), std::invalid_argument);
  CHECK_THROWS_AS(transversal_from_json(parse_json("{shape:[2,1]}")), std::invalid_argument);
}

TEST_CASE("round trips") {
  SkewShape s(Partition{3, 2, 2}, Partition{1, 1});
  CHECK(skew_shape_from_json(to_json(s)) == s);
  CHECK(skew_shape_from_json(parse_json("[2,1]")) == SkewShape(Partition{2, 1}));
  for (const auto& t : enumerate_syt(s)) {
    CHECK(tableau_from_json(to_json(t)) == t);
    YamanouchiWord y = to_yamanouchi_word(t);
    CHECK(yamanouchi_from_json(to_json(y)) == y);
  }
  Permutation p = parse_permutation("10,2,3,4,5,6,7,8,9,1");
  CHECK(permutation_from_json(to_json(p)) == p);
  CHECK(permutation_from_json(parse_json("[2,1]")) == Permutation{2, 1});
  for_each_transversal_of_size(3, false, [](const Transversal& t) {
    CHECK(transversal_from_json(to_json(t)) == t);
    Matching m = to_matching(t);
    CHECK(matching_from_json(to_json(m)) == m);
    OscillatingTableau o = to_oscillating(m);
    CHECK(oscillating_from_json(to_json(o)) == o);
  });
  SetPolynomial poly;
  poly.add(IndexSet{2, 4}, 3);
  poly.add(IndexSet{});
  CHECK(set_polynomial_from_json(to_json(poly)) == poly);
  JointSetPolynomial joint;
  joint.add(IndexSet{3}, IndexSet{2}, 2);
  CHECK(joint_polynomial_from_json(to_json(joint)) == joint);
  CHECK(to_json(joint).dump() == R"([{"set":[3],"set2":[2],"coeff":2}])");
}

TEST_CASE("fixtures") {
  Json g = golden_fixtures();
  CHECK(g["skew_tableaux"]["count"] == 11);
  CHECK(g["skew_tableaux"]["joint"] == "q3 + 2*t2*q4 + 2*t2*t4*q3 + t3 + t3*q2 + 2*t3*q2*q4 + t4*q2 + t4*q3");
  CHECK(g["oscillating"]["barred_word"] == "1 1 2 1 2' 1' 1' 2 3 3' 2' 1 1 2 1' 2' 1' 1'");
  CHECK(g["knuth_class"]["class"].size() == 5);
  CHECK(g["tableau_class"]["class"].size() == 5);
  CHECK(g["transversal"]["type"] == "uuuuddduudduuudddd");
  CHECK(g["pattern_transfer"]["image"] == "129456873");
  CHECK(g.dump() == golden_fixtures().dump());
}

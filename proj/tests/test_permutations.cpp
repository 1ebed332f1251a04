#include <doctest.h>

#include "oracles.hpp"
#include "peakval/permutations.hpp"
#include "peakval/tableaux.hpp"

using namespace peakval;

TEST_CASE("validation and parsing") {
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK(parse_permutation("312") == Permutation{3, 1, 2});
  CHECK(parse_permutation("10,1,2,3,4,5,6,7,8,9").size() == 10);
  CHECK(parse_permutation("e").empty());
  CHECK(to_string(Permutation::identity(10)) == "1,2,3,4,5,6,7,8,9,10");
  CHECK(to_string(Permutation{2, 1}) == "21");
  CHECK(Permutation{2, 3, 1}.inverse() == Permutation{3, 1, 2});
}

TEST_CASE("peaks and valleys") {
  PeakValley pv = peak_valley(parse_permutation("561943728"));
  CHECK(pv.peak == IndexSet{2, 4, 7});
  CHECK(pv.valley == IndexSet{3, 6, 8});
  CHECK(peak_valley(Permutation{1, 2}).peak.empty());
}

TEST_CASE("direct sums") {
  CHECK(direct_sum(Permutation{1, 2}, Permutation{2, 1}) == Permutation{1, 2, 4, 3});
  CHECK(direct_sum(Permutation{2, 1}, Permutation{}) == Permutation{2, 1});
}

TEST_CASE("pattern containment matches subsequence search") {
  for (int k = 1; k <= 4; ++k)
    for_each_permutation(k, [&](const Permutation& pattern) {
      for_each_permutation(6, [&](const Permutation& pi) {
        REQUIRE(contains_pattern(pi, pattern) == oracle::contains(pi.word(), pattern.word()));
      });
    });
  CHECK(contains_pattern(Permutation{1}, Permutation{}));
}

TEST_CASE("class sizes") {
  const std::vector<int> zigzag{1, 1, 1, 2, 5, 16, 61, 272};
  const std::vector<int> involutions{1, 1, 2, 4, 10, 26, 76, 232};
  for (int n = 0; n <= 7; ++n) {
    int a = 0, i = 0, ai = 0, all = 0;
    for_each_in_class(PermutationClass::alternating, n, [&](const Permutation& p) {
      CHECK(p.is_alternating());
      ++a;
    });
    for_each_in_class(PermutationClass::involutions, n, [&](const Permutation&) { ++i; });
    for_each_permutation(n, [&](const Permutation& p) {
      ++all;
      ai += p.is_alternating() && p.is_involution();
    });
    int ai_listed = 0;
    for_each_in_class(PermutationClass::alternating_involutions, n, [&](const Permutation&) { ++ai_listed; });
    CHECK(a == zigzag[n]);
    CHECK(i == involutions[n]);
    CHECK(ai_listed == ai);
    (void)all;
  }
  CHECK(parse_permutation_class("AI") == PermutationClass::alternating_involutions);
  CHECK_THROWS_AS(parse_permutation_class("X"), std::invalid_argument);
}

TEST_CASE("avoidance counts") {
  int inc = 0, mixed = 0;
  for_each_permutation(4, [&](const Permutation& p) {
    inc += avoids(p, {Permutation{1, 2, 3}});
    mixed += avoids(p, {Permutation{2, 1, 3}});
  });
  CHECK(inc == 14);
  CHECK(mixed == 14);
}

TEST_CASE("Knuth moves and the class of 32154") {
  Permutation pi = parse_permutation("32154");
  CHECK(knuth_move(parse_permutation("132"), 2) == parse_permutation("312"));
  CHECK(knuth_move(parse_permutation("213"), 2) == parse_permutation("231"));
  CHECK_THROWS_AS(knuth_move(parse_permutation("123"), 2), std::domain_error);
  std::vector<Permutation> expected;
  for (const char* s : {"32154", "32514", "32541", "35214", "35241"}) expected.push_back(parse_permutation(s));
  CHECK(knuth_class(pi) == expected);
  StandardTableau p = rsk(pi).insertion;
  for (const auto& x : expected) CHECK(rsk(x).insertion == p);
}

TEST_CASE("RSK round trip and recording tableau statistics") {
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [&](const Permutation& pi) {
      RskPair r = rsk(pi);
      REQUIRE(rsk_inverse(r.insertion, r.recording) == pi);
      REQUIRE(peak_valley(r.recording) == peak_valley(pi));
      REQUIRE(rsk(pi.inverse()).insertion == r.recording);
    });
}

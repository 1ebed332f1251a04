#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "peakval/matchings.hpp"

using namespace peakval;

namespace {

const Partition sample_shape{9, 9, 9, 9, 6, 6, 4, 4, 4};

Matching sample_matching() {
  return Matching(std::vector<std::pair<int, int>>{
      {1, 10}, {2, 5}, {3, 7}, {4, 6}, {8, 11}, {9, 18}, {12, 16}, {13, 15}, {14, 17}});
}

}  // namespace

TEST_CASE("validation") {
  CHECK_THROWS_AS(Matching(std::vector<std::pair<int, int>>{{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Matching(std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK(Matching(std::vector<std::pair<int, int>>{{2, 1}}).arcs().front() == Arc{1, 2});
  Matching m(std::vector<std::pair<int, int>>{{2, 4}, {1, 3}});
  CHECK(m.arcs().front() == Arc{1, 3});
  CHECK(m.partner(4) == 2);
  CHECK(m.type() == "uudd");
}

TEST_CASE("matching counts are odd double factorials") {
  for (int n = 0; n <= 7; ++n) {
    std::uint64_t count = 0;
    for_each_matching(n, [&](const Matching&) { ++count; });
    CHECK(count == oracle::odd_double_factorial(n));
  }
}

TEST_CASE("crossings and nestings match the subset search") {
  for (int n = 1; n <= 6; ++n)
    for_each_matching(n, [&](const Matching& m) {
      REQUIRE(max_crossing(m) == oracle::largest_family(m, true));
      REQUIRE(max_nesting(m) == oracle::largest_family(m, false));
    });
}

TEST_CASE("reversal and bilateral symmetry") {
  Matching m(std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
  CHECK(m.reversed() == m);
  Matching n(std::vector<std::pair<int, int>>{{1, 2}, {3, 6}, {4, 5}});
  CHECK(n.reversed() == Matching(std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {5, 6}}));
  CHECK_FALSE(n.is_bilaterally_symmetric());
  for_each_matching(4, [](const Matching& x) { REQUIRE(x.reversed().reversed() == x); });
}

TEST_CASE("matching of the nine column transversal") {
  Transversal t(sample_shape, {6, 9, 7, 8, 5, 1, 3, 4, 2});
  Matching m = to_matching(t);
  CHECK(m == sample_matching());
  CHECK(m.type() == "uuuuddduudduuudddd");
  CHECK(peak_valley(m).peak == IndexSet{3});
  CHECK(peak_valley(m).valley == IndexSet{2, 13});
  CHECK(to_transversal(m) == t);
}

TEST_CASE("transversal correspondence is a bijection per type") {
  for (int n = 1; n <= 5; ++n) {
    std::set<Matching> images;
    for_each_transversal_of_size(n, false, [&](const Transversal& t) {
      Matching m = to_matching(t);
      REQUIRE(to_transversal(m) == t);
      REQUIRE(m.type() == border_type(t.shape()));
      images.insert(m);
    });
    CHECK(images.size() == oracle::odd_double_factorial(n));
  }
}

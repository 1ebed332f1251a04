#include <doctest.h>

#include "oracles.hpp"
#include "peakval/permutations.hpp"
#include "peakval/transversals.hpp"

using namespace peakval;

namespace {

const Partition sample_shape{9, 9, 9, 9, 6, 6, 4, 4, 4};

}  // namespace

TEST_CASE("validation") {
  CHECK_THROWS_AS(Transversal(Partition{2, 1}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Transversal(Partition{2, 1}, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Transversal(Partition{2, 1}, {1, 1}), std::invalid_argument);
  CHECK_NOTHROW(Transversal(Partition{2, 1}, {2, 1}));
  CHECK_THROWS_AS(for_each_transversal(Partition{3, 1}, false, [](const Transversal&) {}), std::invalid_argument);
  CHECK(enumerate_transversals(Partition{3, 1, 1}).empty());
}

TEST_CASE("enumeration matches filtered permutations") {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t total = 0;
    for (const auto& lambda : admissible_shapes(n)) {
      auto words = oracle::transversal_words(lambda);
      auto listed = enumerate_transversals(lambda);
      REQUIRE(listed.size() == words.size());
      for (std::size_t i = 0; i < words.size(); ++i) CHECK(listed[i].word() == words[i]);
      total += words.size();
    }
    CHECK(total == oracle::odd_double_factorial(n));
  }
}

TEST_CASE("symmetric transversals of a square are involutions") {
  const std::vector<std::size_t> involutions{1, 2, 4, 10, 26, 76};
  for (int n = 1; n <= 6; ++n) {
    Partition square(std::vector<int>(n, n));
    auto sym = enumerate_transversals(square, true);
    CHECK(sym.size() == involutions[n - 1]);
    for (const auto& t : sym) CHECK(t.as_permutation().is_involution());
  }
  CHECK_THROWS_AS(enumerate_transversals(Partition{3, 3, 1}, true), std::invalid_argument);
}

TEST_CASE("statistics of 697851342") {
  Transversal t(sample_shape, {6, 9, 7, 8, 5, 1, 3, 4, 2});
  CHECK(peak_valley(t).peak == IndexSet{2, 8});
  CHECK(peak_valley(t).valley == IndexSet{3});
  CHECK(tilde_peak_valley(t).peak == IndexSet{2, 13});
  CHECK(tilde_peak_valley(t).valley == IndexSet{3});
  CHECK(to_string(t) == "697851342 on (9,9,9,9,6,6,4,4,4)");
}

TEST_CASE("transversal 218976534 avoids 4321 and contains 2134") {
  Transversal t(Partition{9, 9, 9, 9, 7, 7, 7, 4, 4}, parse_permutation("218976534").word());
  CHECK_FALSE(contains_pattern(t, parse_permutation("4321")));
  CHECK(contains_pattern(t, parse_permutation("2134")));
  // As a plain permutation it does contain 4321.
  CHECK(contains_pattern(t.as_permutation(), parse_permutation("4321")));
}

TEST_CASE("pattern containment inside the diagram matches subsequence search") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : admissible_shapes(n)) {
      if (!has_transversal(lambda)) continue;
      auto cols = column_lengths(lambda);
      for (const auto& t : enumerate_transversals(lambda))
        for (int k = 1; k <= 3; ++k)
          for_each_permutation(k, [&](const Permutation& p) {
            REQUIRE(contains_pattern(t, p) == oracle::contains(t.word(), p.word(), &cols));
          });
    }
}

TEST_CASE("coloring of 659421873") {
  Transversal t(Partition{9, 9, 9, 9, 9, 8, 8, 8, 5}, parse_permutation("659421873").word());
  BoardColoring c = color_board(t, {Permutation{1}});
  CHECK(c.kept_columns == std::vector<int>{1, 2, 4, 5, 6});
  CHECK(c.kept_rows == std::vector<int>{1, 2, 4, 5, 6});
  CHECK(c.reduced_shape == Partition{5, 5, 5, 5, 5});
  CHECK(c.reduced.as_permutation() == parse_permutation("54321"));
  Transversal back = restore_board(t, c, c.reduced);
  CHECK(back == t);
  auto identity = [](const Transversal& x) { return x; };
  CHECK(recolor_apply(t, {Permutation{1}}, identity) == t);
}

TEST_CASE("coloring with the empty pattern keeps the whole board") {
  Transversal t(Partition{3, 3, 3}, {2, 3, 1});
  BoardColoring c = color_board(t, {Permutation{}});
  CHECK(c.kept_columns == std::vector<int>{1, 2, 3});
  CHECK(c.reduced == t);
}

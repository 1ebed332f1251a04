#include <doctest.h>

#include "oracles.hpp"
#include "peakval/shapes.hpp"
#include "peakval/tableaux.hpp"

using namespace peakval;

TEST_CASE("partitions are validated") {
  CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition::trimmed({3, 1, 0, 0}) == Partition{3, 1});
  CHECK(Partition{}.empty());
  CHECK_THROWS_AS(SkewShape(Partition{2}, Partition{1, 1}), std::invalid_argument);
}

TEST_CASE("conjugate, rank and columns") {
  CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
  CHECK(is_self_conjugate(Partition{3, 2, 1}));
  CHECK_FALSE(is_self_conjugate(Partition{3, 1}));
  CHECK(rank(Partition{4, 3, 2}) == 2);
  CHECK(rank(Partition{5, 1, 1}) == 1);
  CHECK(rank(Partition{3, 3, 3}) == 3);
  CHECK(column_lengths(Partition{3, 1}) == std::vector<int>{2, 1, 1});
}

TEST_CASE("partition counts") {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == p[n]);
  for (const auto& lambda : partitions_in_box(3, 4)) {
    CHECK(lambda.length() <= 3);
    CHECK(lambda.row(1) <= 4);
  }
  CHECK(partitions_in_box(3, 4).size() == 35);
}

TEST_CASE("hook lengths, chain counts and enumeration agree with corner removal") {
  CHECK(hook_length_count(Partition{4, 3, 2}) == 168);
  for (int n = 1; n <= 10; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto expected = oracle::syt_count(lambda.parts());
      CHECK(hook_length_count(lambda) == expected);
      CHECK(chain_count(SkewShape(lambda)) == expected);
      CHECK(enumerate_syt(SkewShape(lambda)).size() == expected);
    }
}

TEST_CASE("skew shape counts") {
  SkewShape s(Partition{3, 2, 2}, Partition{1, 1});
  CHECK(s.size() == 5);
  CHECK(count_syt(s) == 11);
  CHECK(enumerate_syt(s).size() == 11);
  CHECK(to_string(s) == "(3,2,2)/(1,1)");
  // Two disconnected cells.
  CHECK(count_syt(SkewShape(Partition{2, 1}, Partition{1})) == 2);
}

TEST_CASE("admissible shapes and border types") {
  CHECK(is_admissible(Partition{3, 1, 1}));
  CHECK_FALSE(has_transversal(Partition{3, 1, 1}));
  CHECK(has_transversal(Partition{3, 2, 1}));
  CHECK_FALSE(is_admissible(Partition{3, 2}));
  Partition transversal_sample{9, 9, 9, 9, 6, 6, 4, 4, 4};
  CHECK(border_type(transversal_sample) == "uuuuddduudduuudddd");
  CHECK_THROWS_AS(border_type(Partition{2}), std::invalid_argument);
  for (int n = 1; n <= 6; ++n)
    for (const auto& lambda : admissible_shapes(n)) {
      CHECK(is_admissible(lambda));
      CHECK(shape_from_type(border_type(lambda)) == lambda);
    }
  CHECK_THROWS_AS(shape_from_type("ud?"), std::invalid_argument);
  CHECK_THROWS_AS(shape_from_type("du"), std::invalid_argument);
}

TEST_CASE("border step labels split the type into u and d positions") {
  Partition transversal_sample{9, 9, 9, 9, 6, 6, 4, 4, 4};
  std::string type = border_type(transversal_sample);
  for (int label : column_step_labels(transversal_sample)) CHECK(type[label - 1] == 'u');
  for (int label : row_step_labels(transversal_sample)) CHECK(type[label - 1] == 'd');
}

TEST_CASE("parsing and printing") {
  CHECK(parse_partition("3,2,2") == Partition{3, 2, 2});
  CHECK(parse_partition("[4, 1]") == Partition{4, 1});
  CHECK(parse_partition("") == Partition{});
  CHECK_THROWS_AS(parse_partition("3,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK(to_string(Partition{}) == "()");
}

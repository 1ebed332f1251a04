#include <doctest.h>

#include <set>

#include "peakval/tableaux.hpp"

using namespace peakval;

namespace {

struct Row {
  std::vector<std::vector<int>> rows;
  IndexSet peak, valley;
};

// The eleven tableaux of (3,2,2)/(1,1) with their Peak and Val sets.
const std::vector<Row> skew_sample{
    {{{1, 3}, {2}, {4, 5}}, {3}, {2, 4}}, {{{2, 3}, {4}, {1, 5}}, {3}, {}},
    {{{1, 4}, {2}, {3, 5}}, {4}, {3}},    {{{2, 4}, {3}, {1, 5}}, {2, 4}, {3}},
    {{{1, 5}, {2}, {3, 4}}, {}, {3}},     {{{2, 5}, {3}, {1, 4}}, {2}, {4}},
    {{{1, 2}, {4}, {3, 5}}, {2, 4}, {3}}, {{{1, 3}, {4}, {2, 5}}, {3}, {2}},
    {{{1, 2}, {3}, {4, 5}}, {2}, {4}},    {{{1, 4}, {3}, {2, 5}}, {4}, {2}},
    {{{1, 5}, {3}, {2, 4}}, {3}, {2, 4}},
};

std::vector<int> digits(const char* s) {
  std::vector<int> out;
  for (; *s; ++s) out.push_back(*s - '0');
  return out;
}

}  // namespace

TEST_CASE("tableaux of (3,2,2)/(1,1)") {
  SkewShape shape(Partition{3, 2, 2}, Partition{1, 1});
  auto syt = enumerate_syt(shape);
  REQUIRE(syt.size() == 11);
  std::set<std::vector<std::vector<int>>> seen;
  for (const auto& t : syt) seen.insert(t.rows());
  for (const Row& r : skew_sample) {
    StandardTableau t(shape, r.rows);
    CHECK(seen.count(t.rows()) == 1);
    PeakValley pv = peak_valley(t);
    CHECK(pv.peak == r.peak);
    CHECK(pv.valley == r.valley);
  }
}

TEST_CASE("tableau validation") {
  SkewShape shape(Partition{2, 1});
  CHECK_THROWS_AS(StandardTableau(shape, {{1, 3}, {2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(StandardTableau(shape, {{2, 3}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(StandardTableau(shape, {{2, 1}, {3}}), std::invalid_argument);
  CHECK_NOTHROW(StandardTableau(shape, {{1, 3}, {2}}));
  CHECK_THROWS_AS(YamanouchiWord(shape, {2, 1, 1}), std::invalid_argument);
}

TEST_CASE("Yamanouchi word and permutation of two sample tableaux") {
  SkewShape left(Partition{4, 3, 2});
  StandardTableau t = to_tableau(YamanouchiWord(left, digits("123121321")));
  CHECK(to_yamanouchi_word(t).letters() == digits("123121321"));
  CHECK(to_yamanouchi_permutation(t) == parse_permutation("479362851"));
  CHECK(peak_valley(t).peak == IndexSet{4, 6});
  CHECK(peak_valley(t).valley == IndexSet{3, 5, 7});
  PeakValley w = word_peak_valley(digits("123121321"));
  CHECK(w.peak == IndexSet{3, 5, 7});
  CHECK(w.valley == IndexSet{4, 6});

  SkewShape right(Partition{5, 4, 2}, Partition{2, 1});
  StandardTableau s = to_tableau(YamanouchiWord(right, digits("11223123")));
  CHECK(to_yamanouchi_permutation(s) == parse_permutation("32658147"));
  CHECK(to_tableau(parse_permutation("32658147"), right) == s);
  CHECK_THROWS(permutation_to_word(parse_permutation("23658147"), right));
}

TEST_CASE("word conventions use one weak inequality") {
  PeakValley pv = word_peak_valley(std::vector<int>{1, 2, 2, 1});
  CHECK(pv.peak == IndexSet{2});
  CHECK(pv.valley.empty());
  pv = word_peak_valley(std::vector<int>{2, 1, 1, 2});
  CHECK(pv.valley == IndexSet{3});
}

TEST_CASE("Knuth class of a (3,2) tableau is the whole shape") {
  auto syt = enumerate_syt(SkewShape(Partition{3, 2}));
  REQUIRE(syt.size() == 5);
  CHECK(knuth_class(syt.front()) == syt);
  CHECK_THROWS_AS(knuth_move(syt.front(), 2), std::domain_error);
}

TEST_CASE("canonical word pairing examples") {
  SkewShape s(Partition{2, 1});
  CHECK(pair_valley_to_peak(YamanouchiWord(s, {1, 1, 2})).letters() == std::vector<int>{1, 2, 1});
  CHECK(pair_valley_to_peak(YamanouchiWord(s, {1, 2, 1})).letters() == std::vector<int>{1, 1, 2});
  YamanouchiWord row(SkewShape(Partition{4}), {1, 1, 1, 1});
  CHECK(pair_valley_to_peak(row) == row);
  YamanouchiWord column(SkewShape(Partition{1, 1, 1}), {1, 2, 3});
  CHECK(pair_valley_to_peak(column) == column);
}

TEST_CASE("row insertion and reverse bumping") {
  RowTableau t;
  for (int x : {3, 1, 2}) row_insert(t, x);
  CHECK(t == RowTableau{{1, 2}, {3}});
  CHECK(shape_of(t) == Partition{2, 1});
  CHECK(reverse_bump(t, 2) == 2);
  CHECK(t == RowTableau{{1, 3}});
}

TEST_CASE("round trips on small skew shapes") {
  for (const auto& outer : partitions_in_box(4, 4))
    for (const auto& inner : partitions_in_box(outer.length(), outer.row(1))) {
      if (!outer.contains(inner) || outer.size() - inner.size() > 7) continue;
      SkewShape s(outer, inner);
      for (const auto& t : enumerate_syt(s)) {
        REQUIRE(to_tableau(to_yamanouchi_word(t)) == t);
        REQUIRE(to_tableau(to_yamanouchi_permutation(t), s) == t);
        REQUIRE(StandardTableau(s, t.rows()) == t);
      }
    }
}

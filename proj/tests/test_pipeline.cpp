#include <doctest.h>

#include <set>

#include "peakval/pipeline.hpp"

using namespace peakval;

namespace {

Partition square(int n) { return Partition(std::vector<int>(n, n)); }

Transversal on_square(const char* word) {
  Permutation p = parse_permutation(word);
  return Transversal(square(p.size()), p.word());
}

}  // namespace

TEST_CASE("composed maps on small squares") {
  CHECK(conjugation_involution(on_square("21")) == on_square("12"));
  CHECK(exchange_transversal(on_square("132")) == on_square("213"));
  CHECK(exchange_transversal_inverse(on_square("213")) == on_square("132"));
  CHECK(increasing_to_decreasing(square(3), 2)(on_square("321")) == on_square("123"));
  CHECK(increasing_to_decreasing(square(2), 2)(on_square("21")) == on_square("12"));
  Transversal one = on_square("1");
  CHECK(increasing_to_decreasing(square(1), 2)(one) == one);
}

TEST_CASE("the increasing to decreasing map checks its input") {
  auto map = increasing_to_decreasing(square(3), 2);
  CHECK_THROWS_AS(map(on_square("132")), std::invalid_argument);
  CHECK_THROWS_AS(map(on_square("21")), std::invalid_argument);
  CHECK_THROWS_AS(decreasing_to_increasing(square(3), 2)(on_square("321")), std::invalid_argument);
}

TEST_CASE("the conjugation involution on all transversals with four columns") {
  for_each_transversal_of_size(4, false, [](const Transversal& t) {
    Transversal s = conjugation_involution(t);
    REQUIRE(conjugation_involution(s) == t);
    REQUIRE(peak_valley(t).peak == peak_valley(s).valley);
  });
}

TEST_CASE("pattern transfer of 659421873") {
  Transversal t(Partition{9, 9, 9, 9, 9, 8, 8, 8, 5}, parse_permutation("659421873").word());
  PatternTransfer r = pattern_transfer(t, 2, Permutation{1}, false);
  CHECK(r.coloring.reduced_shape == Partition{5, 5, 5, 5, 5});
  CHECK(r.coloring.reduced.as_permutation() == parse_permutation("54321"));
  CHECK(r.reduced_image.as_permutation() == parse_permutation("12345"));
  CHECK(r.image.as_permutation() == parse_permutation("129456873"));
  CHECK(peak_valley(t).peak == IndexSet{3, 7});
  CHECK(peak_valley(r.image).peak == IndexSet{3, 7});
  CHECK(pattern_transfer_inverse(r.image, 2, Permutation{1}, false).image == t);
  CHECK_THROWS_AS(pattern_transfer(r.image, 2, Permutation{1}, false), std::invalid_argument);
}

TEST_CASE("pattern transfer on the 4x4 square") {
  std::set<Transversal> images;
  int count = 0;
  for_each_transversal(square(4), false, [&](const Transversal& t) {
    if (!avoids(t, {parse_permutation("123")})) return;
    ++count;
    Transversal s = pattern_transfer(t, 2, Permutation{1}, false).image;
    CHECK(avoids(s, {parse_permutation("213")}));
    CHECK(peak_valley(s).peak == peak_valley(t).peak);
    images.insert(s);
  });
  CHECK(count == 14);
  CHECK(images.size() == 14);
}

TEST_CASE("symmetric transfer keeps symmetry") {
  for_each_transversal(square(5), true, [](const Transversal& t) {
    if (!avoids(t, {parse_permutation("1243")})) return;
    Transversal s = pattern_transfer(t, 2, Permutation{2, 1}, true).image;
    REQUIRE(s.is_symmetric());
    REQUIRE(avoids(s, {parse_permutation("2143")}));
  });
  CHECK_THROWS_AS(pattern_transfer(on_square("231"), 2, Permutation{1}, true), std::invalid_argument);
  CHECK(transfer_patterns(Permutation{2, 3, 1}, true).size() == 2);
  CHECK(transfer_patterns(Permutation{2, 1}, true).size() == 1);
}

TEST_CASE("class counts") {
  CHECK(class_count(PermutationClass::all, 4, {parse_permutation("123")}).count == 14);
  for (int n = 0; n <= 2; ++n)
    for (auto cls : {PermutationClass::all, PermutationClass::alternating, PermutationClass::involutions,
                     PermutationClass::alternating_involutions}) {
      std::uint64_t size = 0;
      for_each_in_class(cls, n, [&](const Permutation&) { ++size; });
      CHECK(class_count(cls, n, {parse_permutation("123")}).count == size);
    }
  auto a = class_count(PermutationClass::alternating_involutions, 8, {parse_permutation("123")});
  auto b = class_count(PermutationClass::alternating_involutions, 8, {parse_permutation("213")});
  CHECK(a.count == b.count);
  ClassCount sq = transversal_count(square(3), false, {});
  CHECK(sq.count == 6);
  CHECK(transversal_count(3, false, {}).count == 15);
  CHECK(transversal_count(Partition{3, 1, 1}, false, {}).count == 0);
}

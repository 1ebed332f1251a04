#include <doctest.h>

#include <algorithm>

#include "peakval/distributions.hpp"
#include "peakval/tableaux.hpp"

using namespace peakval;

namespace {

std::vector<int> padded(IndexSet s, int width) {
  auto e = s.elements();
  e.resize(width, 0);
  return e;
}

SetPolynomial skew_sample(Statistic stat) {
  return distribution(enumerate_syt(SkewShape(Partition{3, 2, 2}, Partition{1, 1})), stat);
}

}  // namespace

TEST_CASE("index sets") {
  IndexSet s{2, 4};
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(3));
  CHECK(s.size() == 2);
  CHECK(to_string(s) == "{2,4}");
  CHECK(to_string(IndexSet{}) == "{}");
  CHECK_THROWS_AS(IndexSet{64}, std::out_of_range);
  CHECK_THROWS_AS(IndexSet{0}, std::out_of_range);
  CHECK((IndexSet{1, 2} & IndexSet{2, 3}) == IndexSet{2});
}

TEST_CASE("padded lexicographic order") {
  CHECK(IndexSet{} < IndexSet{2});
  CHECK(IndexSet{2} < IndexSet{2, 4});
  CHECK(IndexSet{2, 4} < IndexSet{3});
  CHECK(lex_compare(IndexSet{3}, IndexSet{3}) == 0);
  // Agrees with zero padded vectors on every pair of subsets of [8].
  for (std::uint64_t a = 0; a < 256; ++a)
    for (std::uint64_t b = 0; b < 256; ++b) {
      IndexSet x = IndexSet::from_bits(a << 1), y = IndexSet::from_bits(b << 1);
      auto px = padded(x, 8), py = padded(y, 8);
      int expected = px < py ? -1 : (px == py ? 0 : 1);
      REQUIRE(lex_compare(x, y) == expected);
      REQUIRE(((x <=> y) < 0) == (expected < 0));
    }
}

TEST_CASE("peak multiset of (3,2,2)/(1,1) and its restriction") {
  SetPolynomial peak = skew_sample(Statistic::peak);
  CHECK(peak.total() == 11);
  CHECK(peak.coefficient(IndexSet{}) == 1);
  CHECK(peak.coefficient(IndexSet{2}) == 2);
  CHECK(peak.coefficient(IndexSet{2, 4}) == 2);
  CHECK(peak.coefficient(IndexSet{3}) == 4);
  CHECK(peak.coefficient(IndexSet{4}) == 2);
  CHECK(peak == skew_sample(Statistic::valley));

  SetPolynomial r = restrict(peak, IndexSet{2, 3});
  CHECK(r.coefficient(IndexSet{}) == 3);
  CHECK(r.coefficient(IndexSet{2}) == 4);
  CHECK(r.coefficient(IndexSet{3}) == 4);
  CHECK(r.terms().size() == 3);
}

TEST_CASE("restriction laws") {
  SetPolynomial peak = skew_sample(Statistic::peak);
  CHECK(restrict(peak, IndexSet{1, 2, 3, 4, 5}) == peak);
  SetPolynomial none = restrict(peak, IndexSet{});
  CHECK(none.coefficient(IndexSet{}) == 11);
  for (std::uint64_t b = 0; b < 32; ++b)
    for (std::uint64_t a = b;; a = (a - 1) & b) {
      IndexSet big = IndexSet::from_bits(b << 1), small = IndexSet::from_bits(a << 1);
      CHECK(restrict(restrict(peak, big), small) == restrict(peak, small));
      if (a == 0) break;
    }
}

TEST_CASE("rendering") {
  SetPolynomial one;
  one.add(IndexSet{});
  CHECK(render(one) == "1");
  CHECK(render(SetPolynomial{}) == "0");
  CHECK(render(skew_sample(Statistic::peak)) == "1 + 2*t2 + 2*t2*t4 + 4*t3 + 2*t4");
  JointSetPolynomial j = joint_distribution(enumerate_syt(SkewShape(Partition{3, 2, 2}, Partition{1, 1})));
  CHECK(render(j) == "q3 + 2*t2*q4 + 2*t2*t4*q3 + t3 + t3*q2 + 2*t3*q2*q4 + t4*q2 + t4*q3");
  CHECK(j.first_marginal() == skew_sample(Statistic::peak));
  CHECK(j.second_marginal() == skew_sample(Statistic::valley));
  CHECK(j.swapped().swapped() == j);
  JointSetPolynomial single;
  single.add(IndexSet{}, IndexSet{});
  CHECK(render(single) == "1");
}

TEST_CASE("statistic names") {
  CHECK(parse_statistic("peak") == Statistic::peak);
  CHECK(parse_statistic("val") == Statistic::valley);
  CHECK(parse_statistic("tilde-valley") == Statistic::tilde_valley);
  CHECK_THROWS_AS(parse_statistic("joint"), std::invalid_argument);
  CHECK(to_string(Statistic::tilde_peak) == "tilde-peak");
}

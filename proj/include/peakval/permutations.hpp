#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "peakval/distributions.hpp"

namespace peakval {

// Bijection of [n] in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int n);
  static Permutation decreasing(int n);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  bool empty() const noexcept { return word_.empty(); }
  // Value at position i (1-based).
  int operator[](int i) const { return word_.at(i - 1); }
  const std::vector<int>& word() const noexcept { return word_; }

  Permutation inverse() const;
  bool is_involution() const;
  // pi_1 < pi_2 > pi_3 < ...
  bool is_alternating() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

// Interior positions i with w_{i-1} < w_i > w_{i+1} (peak) or the mirror
// (valley), for any word of distinct letters.
PeakValley strict_peak_valley(std::span<const int> word);
PeakValley peak_valley(const Permutation& pi);

Permutation direct_sum(const Permutation& a, const Permutation& b);

// Order-isomorphic occurrence of `pattern` inside `pi`.
bool contains_pattern(const Permutation& pi, const Permutation& pattern);
bool avoids(const Permutation& pi, const std::vector<Permutation>& patterns);

// Occurrence of `pattern` among the points (i, values[i-1]) whose largest
// value does not exceed bound[last column - 1]. `bound` must be weakly
// decreasing; the transversal and sub-board pattern tests are built on this.
bool contains_pattern_bounded(std::span<const int> values, const Permutation& pattern,
                              std::span<const int> bound);

bool is_knuth_move_defined(const Permutation& pi, int i);
// Exchange inside the window at positions i-1, i, i+1: acb<->cab, bca<->bac.
// Throws std::domain_error when i is neither a peak nor a valley.
Permutation knuth_move(const Permutation& pi, int i);
// Closure under Knuth moves, sorted lexicographically.
std::vector<Permutation> knuth_class(const Permutation& pi);

enum class PermutationClass { all, alternating, involutions, alternating_involutions };
PermutationClass parse_permutation_class(std::string_view name);

// Visits members in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);
void for_each_involution(int n, const std::function<void(const Permutation&)>& visit);
void for_each_in_class(PermutationClass cls, int n,
                       const std::function<void(const Permutation&)>& visit);

// Digit string for n <= 9, comma separated otherwise; "e" or "" is empty.
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& pi);

}  // namespace peakval

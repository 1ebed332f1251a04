#pragma once

#include <compare>
#include <functional>
#include <span>
#include <vector>

#include "peakval/distributions.hpp"
#include "peakval/permutations.hpp"
#include "peakval/shapes.hpp"

namespace peakval {

// Word y_1..y_n over [rows] with |y|_i = outer_i - inner_i whose every prefix
// keeps inner_i + |prefix|_i weakly decreasing in i.
class YamanouchiWord {
 public:
  YamanouchiWord() = default;
  YamanouchiWord(SkewShape shape, std::vector<int> letters);

  static bool is_valid(const SkewShape& shape, std::span<const int> letters);

  const SkewShape& shape() const noexcept { return shape_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  int size() const noexcept { return static_cast<int>(letters_.size()); }

  friend auto operator<=>(const YamanouchiWord&, const YamanouchiWord&) = default;

 private:
  struct trusted {};
  YamanouchiWord(trusted, SkewShape shape, std::vector<int> letters)
      : shape_(std::move(shape)), letters_(std::move(letters)) {}
  friend void for_each_yamanouchi(const SkewShape&,
                                  const std::function<void(const YamanouchiWord&)>&);

  SkewShape shape_;
  std::vector<int> letters_;
};

// Peak: y_{i-1} < y_i >= y_{i+1}. Valley: y_{i-1} >= y_i < y_{i+1}.
PeakValley word_peak_valley(std::span<const int> y);
PeakValley peak_valley(const YamanouchiWord& y);

// Standard filling of a skew shape, stored as the row of each entry.
class StandardTableau {
 public:
  StandardTableau() = default;
  // rows[j] lists the entries of row j+1 from left to right; trailing rows
  // without cells may be omitted.
  StandardTableau(SkewShape shape, const std::vector<std::vector<int>>& rows);

  static StandardTableau from_row_word(const YamanouchiWord& y);

  const SkewShape& shape() const noexcept { return shape_; }
  int size() const noexcept { return static_cast<int>(row_of_.size()); }
  int row_of(int entry) const { return row_of_.at(entry - 1); }
  const std::vector<int>& row_word() const noexcept { return row_of_; }
  std::vector<std::vector<int>> rows() const;
  Cell cell_of(int entry) const;

  // i+1 sits in a strictly lower row than i.
  bool is_descent(int i) const;

  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;

 private:
  SkewShape shape_;
  std::vector<int> row_of_;
};

IndexSet descent_set(const StandardTableau& t);
PeakValley peak_valley(const StandardTableau& t);

YamanouchiWord to_yamanouchi_word(const StandardTableau& t);
StandardTableau to_tableau(const YamanouchiWord& y);

// Occurrences of letter i become the block of values reserved for row i,
// assigned in decreasing order from left to right.
Permutation word_to_permutation(const YamanouchiWord& y);
YamanouchiWord permutation_to_word(const Permutation& pi, const SkewShape& shape);
Permutation to_yamanouchi_permutation(const StandardTableau& t);
StandardTableau to_tableau(const Permutation& pi, const SkewShape& shape);

// Lexicographic order of Yamanouchi words.
void for_each_yamanouchi(const SkewShape& shape,
                         const std::function<void(const YamanouchiWord&)>& visit);
std::vector<YamanouchiWord> enumerate_yamanouchi(const SkewShape& shape);
std::vector<StandardTableau> enumerate_syt(const SkewShape& shape);

bool is_knuth_move_defined(const StandardTableau& t, int i);
// Throws std::domain_error when i is neither a peak nor a valley of t.
StandardTableau knuth_move(const StandardTableau& t, int i);
std::vector<StandardTableau> knuth_class(const StandardTableau& t);

// Rows of a straight tableau with arbitrary distinct entries.
using RowTableau = std::vector<std::vector<int>>;
// Row insertion; returns the 1-based row where the new cell appeared.
int row_insert(RowTableau& t, int x);
// Removes the corner cell ending `row` and bumps upward; returns the value
// pushed out of the first row.
int reverse_bump(RowTableau& t, int row);
Partition shape_of(const RowTableau& t);

struct RskPair {
  StandardTableau insertion;
  StandardTableau recording;
};
RskPair rsk(const Permutation& pi);
Permutation rsk_inverse(const StandardTableau& insertion, const StandardTableau& recording);

// Canonical bijection of Yamanouchi words of one shape carrying Val to Peak:
// words sorted by (Val, word) are paired position by position with words
// sorted by (Peak, word). Tables are cached per shape and thread safe.
YamanouchiWord pair_valley_to_peak(const YamanouchiWord& y);
YamanouchiWord pair_peak_to_valley(const YamanouchiWord& y);

}  // namespace peakval

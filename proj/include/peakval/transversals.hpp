#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "peakval/distributions.hpp"
#include "peakval/permutations.hpp"
#include "peakval/shapes.hpp"

namespace peakval {

// Filling of an admissible shape with one 1 in every row and column.
// Entry i of the word is the row holding the 1 of column i.
class Transversal {
 public:
  Transversal() = default;
  Transversal(Partition shape, std::vector<int> word);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<int>& word() const noexcept { return word_; }
  int size() const noexcept { return static_cast<int>(word_.size()); }
  int operator[](int column) const { return word_.at(column - 1); }

  // Self-conjugate shape and involutive word.
  bool is_symmetric() const;
  std::vector<Cell> ones() const;
  Permutation as_permutation() const { return Permutation(word_); }

  friend auto operator<=>(const Transversal&, const Transversal&) = default;

 private:
  Partition shape_;
  std::vector<int> word_;
};

// Permutation peaks and valleys restricted to indices i whose columns
// i-1, i, i+1 have equal length.
PeakValley peak_valley(const Transversal& t);
// Each index replaced by the border step label under its column.
PeakValley tilde_peak_valley(const Transversal& t);

bool contains_pattern(const Transversal& t, const Permutation& pattern);
bool avoids(const Transversal& t, const std::vector<Permutation>& patterns);

// Lexicographic order of words.
void for_each_transversal(const Partition& shape, bool symmetric_only,
                          const std::function<void(const Transversal&)>& visit);
std::vector<Transversal> enumerate_transversals(const Partition& shape, bool symmetric_only = false);
// Every transversal with n columns, shape by shape.
void for_each_transversal_of_size(int n, bool symmetric_only,
                                  const std::function<void(const Transversal&)>& visit);

// Cells with a 1 below and to the right of them forming one of the patterns
// stay white. Rows and columns of 1's in the other cells are removed; the
// white cells left over form the shape of `reduced`.
struct BoardColoring {
  std::vector<int> kept_columns;
  std::vector<int> kept_rows;
  std::vector<Cell> white;
  Partition reduced_shape;
  Transversal reduced;
};

BoardColoring color_board(const Transversal& t, const std::vector<Permutation>& patterns);

using TransversalMap = std::function<Transversal(const Transversal&)>;

// Applies `inner` to the reduced transversal of the coloring and puts the
// removed rows and columns back.
Transversal recolor_apply(const Transversal& t, const std::vector<Permutation>& patterns,
                          const TransversalMap& inner);
Transversal restore_board(const Transversal& t, const BoardColoring& coloring,
                          const Transversal& reduced_image);

std::string to_string(const Transversal& t);

}  // namespace peakval

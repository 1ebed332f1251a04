#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace peakval {

// A square of a Young diagram: column index counted from the left, row index
// counted from the top, both starting at 1.
struct Cell {
  int column = 0;
  int row = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  // Accepts trailing zeros and drops them.
  static Partition trimmed(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  // Length of row j (1-based); 0 past the last row.
  int row(int j) const noexcept;
  // Length of column i (1-based); 0 past the first row's end.
  int column(int i) const noexcept;

  bool contains(Cell c) const noexcept;
  bool contains(const Partition& inner) const noexcept;

  bool can_add(int row) const noexcept;
  bool can_remove(int row) const noexcept;
  Partition with_cell_added(int row) const;
  Partition with_cell_removed(int row) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Pair inner ⊆ outer; the diagram is the set difference.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.size() - inner_.size(); }
  int rows() const noexcept { return outer_.length(); }
  bool straight() const noexcept { return inner_.empty(); }
  int row_length(int j) const noexcept { return outer_.row(j) - inner_.row(j); }
  bool contains(Cell c) const noexcept { return outer_.contains(c) && !inner_.contains(c); }
  std::vector<Cell> cells() const;

  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

Partition conjugate(const Partition& lambda);
bool is_self_conjugate(const Partition& lambda);
// Largest i with lambda_i >= i (the Durfee square side).
int rank(const Partition& lambda);
std::vector<int> column_lengths(const Partition& lambda);

// Number of standard fillings. Straight shapes use the hook length formula,
// skew shapes count chains of partitions from inner to outer.
std::uint64_t count_syt(const SkewShape& shape);
std::uint64_t hook_length_count(const Partition& lambda);
std::uint64_t chain_count(const SkewShape& shape);

// Shapes carrying transversals: first row length equals number of rows.
bool is_admissible(const Partition& lambda);
// Admissible and row j holds at least n+1-j cells, so some transversal exists.
bool has_transversal(const Partition& lambda);

// South-east border read from south-west to north-east: 'u' for an east
// step, 'd' for a north step.
std::string border_type(const Partition& lambda);
Partition shape_from_type(std::string_view type);
// Label (1..2n) of the east border step under each column, index 0 = column 1.
std::vector<int> column_step_labels(const Partition& lambda);
// Label of the north border step beside each row, index 0 = row 1.
std::vector<int> row_step_labels(const Partition& lambda);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_in_box(int max_rows, int max_columns);
// All admissible shapes with n columns.
std::vector<Partition> admissible_shapes(int n);

Partition parse_partition(std::string_view text);
std::string to_string(const Partition& lambda);
std::string to_string(const SkewShape& shape);

}  // namespace peakval

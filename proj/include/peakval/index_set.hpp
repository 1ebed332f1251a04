#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace peakval {

// Finite set of positive integers 1..63, stored as a bitmask.
// Ordering is the lexicographic order on sorted element lists where the
// shorter list is padded with zeros, so a proper prefix compares smaller.
class IndexSet {
 public:
  static constexpr int max_element = 63;

  IndexSet() = default;
  IndexSet(std::initializer_list<int> elements);
  explicit IndexSet(const std::vector<int>& elements);

  static IndexSet from_bits(std::uint64_t bits) noexcept;

  void insert(int i);
  void erase(int i);
  bool contains(int i) const noexcept;
  bool empty() const noexcept { return bits_ == 0; }
  int size() const noexcept;
  std::uint64_t bits() const noexcept { return bits_; }
  std::vector<int> elements() const;

  IndexSet operator&(IndexSet other) const noexcept { return from_bits(bits_ & other.bits_); }
  IndexSet operator|(IndexSet other) const noexcept { return from_bits(bits_ | other.bits_); }

  friend bool operator==(IndexSet a, IndexSet b) noexcept { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(IndexSet a, IndexSet b) noexcept;

 private:
  std::uint64_t bits_ = 0;
};

// {2,4} style rendering.
std::string to_string(IndexSet s);

// Three-way comparison in the padded lexicographic order.
int lex_compare(IndexSet a, IndexSet b) noexcept;

}  // namespace peakval

#include "peakval/index_set.hpp"

#include <bit>
#include <stdexcept>

namespace peakval {

IndexSet::IndexSet(std::initializer_list<int> elements) {
  for (int e : elements) insert(e);
}

IndexSet::IndexSet(const std::vector<int>& elements) {
  for (int e : elements) insert(e);
}

IndexSet IndexSet::from_bits(std::uint64_t bits) noexcept {
  IndexSet s;
  s.bits_ = bits & ~std::uint64_t{1};
  return s;
}

void IndexSet::insert(int i) {
  if (i < 1 || i > max_element)
    throw std::out_of_range("index set element out of range: " + std::to_string(i));
  bits_ |= std::uint64_t{1} << i;
}

void IndexSet::erase(int i) {
  if (i >= 1 && i <= max_element) bits_ &= ~(std::uint64_t{1} << i);
}

bool IndexSet::contains(int i) const noexcept {
  return i >= 1 && i <= max_element && ((bits_ >> i) & 1u);
}

int IndexSet::size() const noexcept { return std::popcount(bits_); }

std::vector<int> IndexSet::elements() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

int lex_compare(IndexSet a, IndexSet b) noexcept {
  std::uint64_t x = a.bits(), y = b.bits();
  while (true) {
    if (!x && !y) return 0;
    if (!x) return -1;
    if (!y) return 1;
    int ex = std::countr_zero(x), ey = std::countr_zero(y);
    if (ex != ey) return ex < ey ? -1 : 1;
    x &= x - 1;
    y &= y - 1;
  }
}

std::strong_ordering operator<=>(IndexSet a, IndexSet b) noexcept {
  int c = lex_compare(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace peakval

#include "peakval/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace peakval {

namespace {

void check_parts(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  check_parts(parts_);
  for (int p : parts_) size_ += p;
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::trimmed(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

int Partition::row(int j) const noexcept {
  return (j >= 1 && j <= length()) ? parts_[j - 1] : 0;
}

int Partition::column(int i) const noexcept {
  if (i < 1) return 0;
  int c = 0;
  while (c < length() && parts_[c] >= i) ++c;
  return c;
}

bool Partition::contains(Cell c) const noexcept {
  return c.row >= 1 && c.column >= 1 && c.column <= row(c.row);
}

bool Partition::contains(const Partition& inner) const noexcept {
  if (inner.length() > length()) return false;
  for (int j = 1; j <= inner.length(); ++j)
    if (inner.row(j) > row(j)) return false;
  return true;
}

bool Partition::can_add(int r) const noexcept {
  if (r < 1 || r > length() + 1) return false;
  return r == 1 || row(r - 1) > row(r);
}

bool Partition::can_remove(int r) const noexcept {
  if (r < 1 || r > length()) return false;
  return row(r) > row(r + 1);
}

Partition Partition::with_cell_added(int r) const {
  if (!can_add(r)) throw std::invalid_argument("no addable cell in row " + std::to_string(r));
  Partition out = *this;
  if (r == length() + 1)
    out.parts_.push_back(1);
  else
    ++out.parts_[r - 1];
  ++out.size_;
  return out;
}

Partition Partition::with_cell_removed(int r) const {
  if (!can_remove(r)) throw std::invalid_argument("no removable cell in row " + std::to_string(r));
  Partition out = *this;
  if (--out.parts_[r - 1] == 0) out.parts_.pop_back();
  --out.size_;
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw std::invalid_argument("inner shape " + to_string(inner_) + " not contained in " +
                                to_string(outer_));
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int r = 1; r <= rows(); ++r)
    for (int c = inner_.row(r) + 1; c <= outer_.row(r); ++c) out.push_back({c, r});
  return out;
}

Partition conjugate(const Partition& lambda) {
  return Partition::trimmed(column_lengths(lambda));
}

bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

int rank(const Partition& lambda) {
  int r = 0;
  while (lambda.row(r + 1) >= r + 1) ++r;
  return r;
}

std::vector<int> column_lengths(const Partition& lambda) {
  std::vector<int> cols(lambda.row(1), 0);
  for (int p : lambda.parts())
    for (int i = 0; i < p; ++i) ++cols[i];
  return cols;
}

std::uint64_t hook_length_count(const Partition& lambda) {
  // Prime exponents of n! minus those of the hook product.
  const int n = lambda.size();
  std::vector<int> exponent(n + 1, 0);
  auto factor = [&](int x, int sign) {
    for (int p = 2; x > 1; ++p)
      while (x % p == 0) {
        exponent[p] += sign;
        x /= p;
      }
  };
  for (int k = 2; k <= n; ++k) factor(k, 1);
  auto cols = column_lengths(lambda);
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.row(r); ++c) factor(lambda.row(r) - c + cols[c - 1] - r + 1, -1);
  std::uint64_t result = 1;
  for (int p = 2; p <= n; ++p)
    for (int e = 0; e < exponent[p]; ++e) {
      if (result > UINT64_MAX / static_cast<std::uint64_t>(p))
        throw std::overflow_error("standard tableau count exceeds 64 bits");
      result *= static_cast<std::uint64_t>(p);
    }
  return result;
}

std::uint64_t chain_count(const SkewShape& shape) {
  const Partition& outer = shape.outer();
  std::map<Partition, std::uint64_t> level{{shape.inner(), 1}};
  for (int step = 0; step < shape.size(); ++step) {
    std::map<Partition, std::uint64_t> next;
    for (const auto& [nu, ways] : level)
      for (int r = 1; r <= nu.length() + 1; ++r)
        if (nu.can_add(r) && nu.row(r) < outer.row(r)) next[nu.with_cell_added(r)] += ways;
    level = std::move(next);
  }
  auto it = level.find(outer);
  return it == level.end() ? 0 : it->second;
}

std::uint64_t count_syt(const SkewShape& shape) {
  return shape.straight() ? hook_length_count(shape.outer()) : chain_count(shape);
}

bool is_admissible(const Partition& lambda) { return lambda.row(1) == lambda.length(); }

bool has_transversal(const Partition& lambda) {
  if (!is_admissible(lambda)) return false;
  int n = lambda.length();
  for (int j = 1; j <= n; ++j)
    if (lambda.row(j) < n + 1 - j) return false;
  return true;
}

std::string border_type(const Partition& lambda) {
  if (!is_admissible(lambda))
    throw std::invalid_argument("shape " + to_string(lambda) +
                                " is not admissible: first row length differs from row count");
  std::string out;
  int x = 0;
  for (int r = lambda.length(); r >= 1; --r) {
    for (; x < lambda.row(r); ++x) out += 'u';
    out += 'd';
  }
  return out;
}

Partition shape_from_type(std::string_view type) {
  std::vector<int> from_bottom;
  int x = 0;
  for (char ch : type) {
    if (ch == 'u')
      ++x;
    else if (ch == 'd')
      from_bottom.push_back(x);
    else
      throw std::invalid_argument("type letters must be 'u' or 'd'");
  }
  std::vector<int> parts(from_bottom.rbegin(), from_bottom.rend());
  if (!parts.empty() && (parts.back() == 0 || parts.front() != x))
    throw std::invalid_argument("type does not start with 'u' and end with 'd'");
  Partition lambda(std::move(parts));
  if (!is_admissible(lambda)) throw std::invalid_argument("type has unequal letter counts");
  return lambda;
}

std::vector<int> column_step_labels(const Partition& lambda) {
  std::vector<int> out;
  for (int j = 1; j <= lambda.row(1); ++j) {
    int shorter = 0;
    for (int p : lambda.parts()) shorter += p < j;
    out.push_back(j + shorter);
  }
  return out;
}

std::vector<int> row_step_labels(const Partition& lambda) {
  std::vector<int> out;
  for (int j = 1; j <= lambda.length(); ++j) out.push_back(lambda.row(j) + lambda.length() - j + 1);
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, int max_rows, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_rows == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_rows - 1, cur, out);
    cur.pop_back();
  }
}

void box_rec(int max_rows, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (static_cast<int>(cur.size()) == max_rows) return;
  for (int p = 1; p <= max_part; ++p) {
    cur.push_back(p);
    box_rec(max_rows, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, n, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(int max_rows, int max_columns) {
  std::vector<Partition> out;
  std::vector<int> cur;
  box_rec(max_rows, max_columns, cur, out);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.parts() > b.parts();
  });
  return out;
}

std::vector<Partition> admissible_shapes(int n) {
  if (n == 0) return {Partition{}};
  std::vector<Partition> out;
  for (const Partition& rest : partitions_in_box(n - 1, n)) {
    if (rest.length() != n - 1) continue;
    std::vector<int> parts{n};
    parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
    out.emplace_back(std::move(parts));
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch >= '0' && ch <= '9') {
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) throw std::invalid_argument("bad number in partition");
      i = static_cast<std::size_t>(ptr - text.data());
      parts.push_back(value);
    } else if (ch == ',' || ch == ' ' || ch == '[' || ch == ']' || ch == '(' || ch == ')') {
      ++i;
    } else {
      throw std::invalid_argument("unexpected character in partition: " + std::string(text));
    }
  }
  return Partition::trimmed(std::move(parts));
}

std::string to_string(const Partition& lambda) {
  std::string out = "(";
  for (int j = 0; j < lambda.length(); ++j) {
    if (j) out += ',';
    out += std::to_string(lambda.parts()[j]);
  }
  return out + ")";
}

std::string to_string(const SkewShape& shape) {
  if (shape.straight()) return to_string(shape.outer());
  return to_string(shape.outer()) + "/" + to_string(shape.inner());
}

}  // namespace peakval

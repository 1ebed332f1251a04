#include "peakval/permutations.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace peakval {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<char> seen(word_.size() + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > size() || seen[v])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()));
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(word_.size());
  for (int i = 0; i < size(); ++i) w[word_[i] - 1] = i + 1;
  return Permutation(std::move(w));
}

bool Permutation::is_involution() const {
  for (int i = 0; i < size(); ++i)
    if (word_[word_[i] - 1] != i + 1) return false;
  return true;
}

bool Permutation::is_alternating() const {
  for (int i = 1; i < size(); ++i) {
    bool up = word_[i - 1] < word_[i];
    if (up != (i % 2 == 1)) return false;
  }
  return true;
}

PeakValley strict_peak_valley(std::span<const int> w) {
  PeakValley pv;
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    if (w[i - 1] < w[i] && w[i] > w[i + 1]) pv.peak.insert(static_cast<int>(i) + 1);
    if (w[i - 1] > w[i] && w[i] < w[i + 1]) pv.valley.insert(static_cast<int>(i) + 1);
  }
  return pv;
}

PeakValley peak_valley(const Permutation& pi) { return strict_peak_valley(pi.word()); }

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> w = a.word();
  for (int v : b.word()) w.push_back(v + a.size());
  return Permutation(std::move(w));
}

namespace {

struct PatternSearch {
  std::span<const int> values;
  std::span<const int> bound;
  const std::vector<int>& pattern;
  std::vector<int> chosen;

  bool run(std::size_t depth, std::size_t start, int max_value) {
    const std::size_t k = pattern.size(), n = values.size();
    for (std::size_t i = start; i + (k - depth) <= n; ++i) {
      int v = values[i];
      int m = std::max(max_value, v);
      if (m > bound[i]) continue;
      bool consistent = true;
      for (std::size_t l = 0; l < depth && consistent; ++l)
        consistent = (v > chosen[l]) == (pattern[depth] > pattern[l]);
      if (!consistent) continue;
      if (depth + 1 == k) return true;
      chosen[depth] = v;
      if (run(depth + 1, i + 1, m)) return true;
    }
    return false;
  }
};

}  // namespace

bool contains_pattern_bounded(std::span<const int> values, const Permutation& pattern,
                              std::span<const int> bound) {
  if (bound.size() != values.size()) throw std::invalid_argument("bound length mismatch");
  if (pattern.empty()) return true;
  PatternSearch s{values, bound, pattern.word(), std::vector<int>(pattern.size())};
  return s.run(0, 0, INT_MIN);
}

bool contains_pattern(const Permutation& pi, const Permutation& pattern) {
  std::vector<int> bound(pi.size(), INT_MAX);
  return contains_pattern_bounded(pi.word(), pattern, bound);
}

bool avoids(const Permutation& pi, const std::vector<Permutation>& patterns) {
  for (const auto& p : patterns)
    if (contains_pattern(pi, p)) return false;
  return true;
}

bool is_knuth_move_defined(const Permutation& pi, int i) {
  if (i < 2 || i > pi.size() - 1) return false;
  int a = pi[i - 1], b = pi[i], c = pi[i + 1];
  return (a < b && b > c) || (a > b && b < c);
}

Permutation knuth_move(const Permutation& pi, int i) {
  if (!is_knuth_move_defined(pi, i))
    throw std::domain_error("Knuth move undefined at index " + std::to_string(i));
  std::vector<int> w = pi.word();
  int left = w[i - 2], mid = w[i - 1], right = w[i];
  bool peak = left < mid;
  // Peaks: acb -> cab when left < right, bca -> bac otherwise.
  // Valleys: cab -> acb when left > right, bac -> bca otherwise.
  if (peak == (left < right))
    std::swap(w[i - 2], w[i - 1]);
  else
    std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

std::vector<Permutation> knuth_class(const Permutation& pi) {
  std::set<Permutation> seen{pi};
  std::deque<Permutation> queue{pi};
  while (!queue.empty()) {
    Permutation cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 2; i < cur.size(); ++i) {
      if (!is_knuth_move_defined(cur, i)) continue;
      Permutation next = knuth_move(cur, i);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

PermutationClass parse_permutation_class(std::string_view name) {
  if (name == "S") return PermutationClass::all;
  if (name == "A") return PermutationClass::alternating;
  if (name == "I") return PermutationClass::involutions;
  if (name == "AI") return PermutationClass::alternating_involutions;
  throw std::invalid_argument("unknown permutation class: " + std::string(name));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

namespace {

void involutions_rec(int i, std::vector<int>& w,
                     const std::function<void(const Permutation&)>& visit) {
  const int n = static_cast<int>(w.size());
  while (i < n && w[i] != 0) ++i;
  if (i == n) {
    visit(Permutation(w));
    return;
  }
  for (int j = i; j < n; ++j) {
    if (w[j] != 0) continue;
    w[i] = j + 1;
    w[j] = i + 1;
    involutions_rec(i + 1, w, visit);
    w[i] = w[j] = 0;
  }
}

}  // namespace

void for_each_involution(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> w(n, 0);
  involutions_rec(0, w, visit);
}

void for_each_in_class(PermutationClass cls, int n,
                       const std::function<void(const Permutation&)>& visit) {
  switch (cls) {
    case PermutationClass::all:
      for_each_permutation(n, visit);
      return;
    case PermutationClass::alternating:
      for_each_permutation(n, [&](const Permutation& p) {
        if (p.is_alternating()) visit(p);
      });
      return;
    case PermutationClass::involutions:
      for_each_involution(n, visit);
      return;
    case PermutationClass::alternating_involutions:
      for_each_involution(n, [&](const Permutation& p) {
        if (p.is_alternating()) visit(p);
      });
      return;
  }
}

Permutation parse_permutation(std::string_view text) {
  if (text.empty() || text == "e") return Permutation{};
  std::vector<int> w;
  if (text.find(',') == std::string_view::npos && text.find(' ') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("bad permutation: " + std::string(text));
      w.push_back(ch - '0');
    }
  } else {
    int value = -1;
    for (char ch : text) {
      if (ch >= '0' && ch <= '9') {
        value = (value < 0 ? 0 : value * 10) + (ch - '0');
      } else if (ch == ',' || ch == ' ') {
        if (value >= 0) w.push_back(value);
        value = -1;
      } else {
        throw std::invalid_argument("bad permutation: " + std::string(text));
      }
    }
    if (value >= 0) w.push_back(value);
  }
  return Permutation(std::move(w));
}

std::string to_string(const Permutation& pi) {
  std::string out;
  for (int i = 0; i < pi.size(); ++i) {
    if (pi.size() > 9 && i) out += ',';
    out += std::to_string(pi.word()[i]);
  }
  return out;
}

}  // namespace peakval

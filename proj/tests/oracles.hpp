#pragma once

// Brute force references kept independent of the library algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "peakval/matchings.hpp"
#include "peakval/shapes.hpp"

namespace oracle {

inline std::uint64_t odd_double_factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 1; i < 2 * n; i += 2) r *= static_cast<std::uint64_t>(i);
  return r;
}

// Standard tableaux of a straight shape by removing the largest entry from
// each corner in turn.
inline std::uint64_t syt_count(const std::vector<int>& parts) {
  static std::map<std::vector<int>, std::uint64_t> memo;
  std::vector<int> p = parts;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) return 1;
  if (auto it = memo.find(p); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < p.size(); ++r) {
    if (r + 1 < p.size() && p[r + 1] == p[r]) continue;
    std::vector<int> q = p;
    --q[r];
    total += syt_count(q);
  }
  memo[p] = total;
  return total;
}

// Every k-subset of [n] as increasing index lists.
inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == k) {
      visit(idx);
      return;
    }
    for (int i = from; i <= n - (k - pos); ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

inline bool same_order(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
  return true;
}

// Occurrence of `pattern` in `word` (0-based subsequences); with
// `column_lengths` the occurrence must also fit in the diagram: every value
// at most the length of the last chosen column.
inline bool contains(const std::vector<int>& word, const std::vector<int>& pattern,
                     const std::vector<int>* column_lengths = nullptr) {
  const int n = static_cast<int>(word.size()), k = static_cast<int>(pattern.size());
  if (k == 0) return true;
  if (k > n) return false;
  bool found = false;
  for_each_subset(n, k, [&](const std::vector<int>& idx) {
    if (found) return;
    std::vector<int> sub;
    for (int i : idx) sub.push_back(word[i]);
    if (column_lengths && *std::max_element(sub.begin(), sub.end()) > (*column_lengths)[idx.back()]) return;
    found = same_order(sub, pattern);
  });
  return found;
}

// Largest set of pairwise crossing (or pairwise nesting) arcs.
inline int largest_family(const peakval::Matching& m, bool crossing) {
  const auto& arcs = m.arcs();
  const int n = static_cast<int>(arcs.size());
  int best = n ? 1 : 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<peakval::Arc> chosen;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) chosen.push_back(arcs[i]);
    bool ok = true;
    for (std::size_t a = 0; a < chosen.size() && ok; ++a)
      for (std::size_t b = a + 1; b < chosen.size() && ok; ++b) {
        const auto& x = chosen[a];
        const auto& y = chosen[b];
        ok = crossing ? (x.opener < y.opener && y.opener < x.closer && x.closer < y.closer)
                      : (x.opener < y.opener && y.closer < x.closer);
      }
    if (ok) best = std::max(best, static_cast<int>(chosen.size()));
  }
  return best;
}

// Transversal words of a shape by filtering all permutations.
inline std::vector<std::vector<int>> transversal_words(const peakval::Partition& shape) {
  std::vector<std::vector<int>> out;
  const int n = shape.length();
  if (shape.row(1) != n) return out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = w[i] <= shape.column(i + 1);
    if (ok) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace oracle

#pragma once

#include <compare>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "peakval/distributions.hpp"
#include "peakval/transversals.hpp"

namespace peakval {

struct Arc {
  int opener = 0;
  int closer = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Perfect matching of [2n], arcs kept sorted by opener.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Arc> arcs);
  explicit Matching(const std::vector<std::pair<int, int>>& arcs);

  int size() const noexcept { return static_cast<int>(arcs_.size()); }
  int points() const noexcept { return 2 * size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  int partner(int p) const { return partner_.at(p - 1); }
  bool is_opener(int p) const { return partner(p) > p; }

  // 'u' at openers and 'd' at closers.
  std::string type() const;
  // Arcs (i, j) become (2n+1-j, 2n+1-i).
  Matching reversed() const;
  bool is_bilaterally_symmetric() const { return reversed() == *this; }

  friend bool operator==(const Matching& a, const Matching& b) { return a.arcs_ == b.arcs_; }
  friend auto operator<=>(const Matching& a, const Matching& b) { return a.arcs_ <=> b.arcs_; }

 private:
  std::vector<Arc> arcs_;
  std::vector<int> partner_;
};

// Index i with i-1, i, i+1 openers whose partners a, b, c satisfy a < b > c
// (peak) or a > b < c (valley).
PeakValley peak_valley(const Matching& m);

// Largest k admitting arcs i_1<..<i_k<j_1<..<j_k (crossing) or
// i_1<..<i_k<j_k<..<j_1 (nesting).
int max_crossing(const Matching& m);
int max_nesting(const Matching& m);
inline bool is_noncrossing(const Matching& m, int k) { return max_crossing(m) < k; }
inline bool is_nonnesting(const Matching& m, int k) { return max_nesting(m) < k; }

void for_each_matching(int n, const std::function<void(const Matching&)>& visit);
std::vector<Matching> enumerate_matchings(int n);

// The i-th opener from the left is joined to the j-th closer from the right
// exactly when the transversal has a 1 in column i, row j.
Matching to_matching(const Transversal& t);
Transversal to_transversal(const Matching& m);

std::string to_string(const Matching& m);

}  // namespace peakval

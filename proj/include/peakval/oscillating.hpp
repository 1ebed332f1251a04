#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "peakval/distributions.hpp"
#include "peakval/matchings.hpp"
#include "peakval/shapes.hpp"
#include "peakval/tableaux.hpp"

namespace peakval {

// Sequence of shapes starting at the empty shape, consecutive shapes
// differing by one square. The bijections below need the last shape empty.
class OscillatingTableau {
 public:
  OscillatingTableau() : shapes_{Partition{}} {}
  explicit OscillatingTableau(std::vector<Partition> shapes);

  const std::vector<Partition>& shapes() const noexcept { return shapes_; }
  const Partition& operator[](int i) const { return shapes_.at(i); }
  // Number of steps.
  int length() const noexcept { return static_cast<int>(shapes_.size()) - 1; }
  bool closed() const noexcept { return shapes_.back().empty(); }
  OscillatingTableau reversed() const;

  friend auto operator<=>(const OscillatingTableau&, const OscillatingTableau&) = default;

 private:
  std::vector<Partition> shapes_;
};

struct Step {
  bool added = true;
  int row = 0;
};
// Step from shape i-1 to shape i (1-based).
Step step_at(const OscillatingTableau& o, int i);

// Row of each added or removed square; removed squares are negative (barred).
using BarredWord = std::vector<int>;
BarredWord barred_word(const OscillatingTableau& o);
OscillatingTableau from_barred_word(const BarredWord& y);
std::string to_string(const BarredWord& y);

// Index i with y_{i-1}, y_i, y_{i+1} unbarred and y_{i-1} < y_i >= y_{i+1}
// (peak) or y_{i-1} >= y_i < y_{i+1} (valley).
PeakValley peak_valley(const OscillatingTableau& o);

int max_rows(const OscillatingTableau& o);
int max_columns(const OscillatingTableau& o);
inline bool is_symmetric(const OscillatingTableau& o) { return o.reversed() == o; }

// Points read from 2n down to 1: a closer row-inserts its opener, an opener
// deletes itself. The sequence of shapes is recorded.
OscillatingTableau to_oscillating(const Matching& m);
// Points read from 1 up to 2n: an opener (j,k) inserts 2n+1-k, a closer j
// deletes 2n+1-j.
OscillatingTableau to_oscillating_ascending(const Matching& m);
Matching to_matching(const OscillatingTableau& o);

// Every shape conjugated.
OscillatingTableau conjugate_shapes(const OscillatingTableau& o);

// Maximal runs of additions and deletions. A run keeps both end shapes.
struct Run {
  bool addition = true;
  std::vector<Partition> chain;
  friend bool operator==(const Run&, const Run&) = default;
};
std::vector<Run> decompose(const OscillatingTableau& o);
OscillatingTableau recompose(const std::vector<Run>& runs);

// Rows of the added squares of an addition run, as a Yamanouchi word of
// (last shape)/(first shape).
YamanouchiWord run_word(const Run& addition_run);
Run run_from_word(const YamanouchiWord& y);
// Deletion run read backwards.
YamanouchiWord deletion_run_word(const Run& deletion_run);
Run deletion_run_from_word(const YamanouchiWord& y);

// Every run word is sent through the canonical Yamanouchi bijection.
OscillatingTableau exchange_runs(const OscillatingTableau& o);
OscillatingTableau exchange_runs_inverse(const OscillatingTableau& o);

// All oscillating tableaux of length 2n ending empty, built step by step.
void for_each_oscillating(int n, const std::function<void(const OscillatingTableau&)>& visit);

std::string to_string(const OscillatingTableau& o);

}  // namespace peakval

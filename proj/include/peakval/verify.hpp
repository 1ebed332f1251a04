#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "peakval/json_io.hpp"
#include "peakval/oscillating.hpp"
#include "peakval/permutations.hpp"

namespace peakval {

struct VerifyOptions {
  std::string theorem;
  // Main size bound; its meaning (cells, n, columns) depends on the theorem.
  // Zero selects the theorem's default.
  int max_size = 0;
  // Outer shapes of skew shapes fit in a box x box square.
  int box = 6;
  // Extra admissible shapes with at most this many cells, beyond the squares.
  int max_cells = 20;
  std::vector<int> ks{2, 3};
  std::vector<Permutation> taus{Permutation{1}, Permutation{1, 2}, Permutation{2, 1}};
  int jobs = 1;
  // Shape conjugation used by checks built on it; replaceable for harness tests.
  std::function<OscillatingTableau(const OscillatingTableau&)> conjugate = conjugate_shapes;
};

struct VerifyReport {
  std::string theorem;
  Json bounds;
  std::uint64_t checked = 0;
  bool passed = true;
  Json counterexample;  // null when passed
};

Json to_json(const VerifyReport& r);

struct TheoremInfo {
  std::string id;
  std::string summary;
  int default_size;
  int max_size;
};
const std::vector<TheoremInfo>& theorem_catalog();

// Throws std::invalid_argument for an unknown id or a bound over the ceiling.
VerifyReport verify(const VerifyOptions& options);

}  // namespace peakval

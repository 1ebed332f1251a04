#pragma once

#include <cstdint>
#include <vector>

#include "peakval/distributions.hpp"
#include "peakval/matchings.hpp"
#include "peakval/oscillating.hpp"
#include "peakval/permutations.hpp"
#include "peakval/transversals.hpp"

namespace peakval {

// Transversal -> matching -> oscillating tableau, conjugate every shape, and
// back. An involution sending Peak to Val and exchanging avoidance of
// 12..k and k..21.
Transversal conjugation_involution(const Transversal& t);

// Transversal -> matching -> oscillating tableau, exchange the run words,
// and back. Sends Peak to Val and keeps avoidance of 12..k and k..21.
Transversal exchange_transversal(const Transversal& t);
Transversal exchange_transversal_inverse(const Transversal& t);

// conjugation_involution after exchange_transversal: a Peak preserving map
// from transversals of `shape` avoiding 12..k onto those avoiding k..21.
// The maps reject inputs of another shape or containing the pattern.
TransversalMap increasing_to_decreasing(const Partition& shape, int k);
TransversalMap decreasing_to_increasing(const Partition& shape, int k);

// {tau}, or {tau, tau^-1} for the symmetric variant.
std::vector<Permutation> transfer_patterns(const Permutation& tau, bool symmetric);

struct PatternTransfer {
  BoardColoring coloring;
  Transversal reduced_image;
  Transversal image;
};

// Sends a transversal avoiding (12..k)+tau to one of the same shape and Peak
// set avoiding (k..21)+tau. With `symmetric` the input must be symmetric and
// so is the output.
PatternTransfer pattern_transfer(const Transversal& t, int k, const Permutation& tau, bool symmetric);
PatternTransfer pattern_transfer_inverse(const Transversal& t, int k, const Permutation& tau,
                                         bool symmetric);

struct ClassCount {
  std::uint64_t count = 0;
  SetPolynomial distribution;
  friend bool operator==(const ClassCount&, const ClassCount&) = default;
};

ClassCount class_count(PermutationClass cls, int n, const std::vector<Permutation>& avoid,
                       Statistic stat = Statistic::peak);
ClassCount transversal_count(const Partition& shape, bool symmetric,
                             const std::vector<Permutation>& avoid, Statistic stat = Statistic::peak);
// Over every admissible shape with n columns.
ClassCount transversal_count(int n, bool symmetric, const std::vector<Permutation>& avoid,
                             Statistic stat = Statistic::peak);

}  // namespace peakval

#include "peakval/pipeline.hpp"

#include <stdexcept>

namespace peakval {

Transversal conjugation_involution(const Transversal& t) {
  return to_transversal(to_matching(conjugate_shapes(to_oscillating(to_matching(t)))));
}

Transversal exchange_transversal(const Transversal& t) {
  return to_transversal(to_matching(exchange_runs(to_oscillating(to_matching(t)))));
}

Transversal exchange_transversal_inverse(const Transversal& t) {
  return to_transversal(to_matching(exchange_runs_inverse(to_oscillating(to_matching(t)))));
}

namespace {

void check_input(const Transversal& t, const Partition& shape, const Permutation& forbidden) {
  if (t.shape() != shape)
    throw std::invalid_argument("transversal of shape " + to_string(t.shape()) + ", expected " +
                                to_string(shape));
  if (contains_pattern(t, forbidden))
    throw std::invalid_argument("transversal " + to_string(t) + " contains " + to_string(forbidden));
}

}  // namespace

TransversalMap increasing_to_decreasing(const Partition& shape, int k) {
  return [shape, k](const Transversal& t) {
    check_input(t, shape, Permutation::identity(k));
    return conjugation_involution(exchange_transversal(t));
  };
}

TransversalMap decreasing_to_increasing(const Partition& shape, int k) {
  return [shape, k](const Transversal& t) {
    check_input(t, shape, Permutation::decreasing(k));
    return exchange_transversal_inverse(conjugation_involution(t));
  };
}

std::vector<Permutation> transfer_patterns(const Permutation& tau, bool symmetric) {
  std::vector<Permutation> out{tau};
  if (symmetric && tau.inverse() != tau) out.push_back(tau.inverse());
  return out;
}

namespace {

PatternTransfer transfer(const Transversal& t, int k, const Permutation& tau, bool symmetric,
                         bool forward) {
  if (k < 1) throw std::invalid_argument("pattern length k must be positive");
  Permutation from = forward ? Permutation::identity(k) : Permutation::decreasing(k);
  for (const auto& p : transfer_patterns(tau, symmetric))
    if (contains_pattern(t, direct_sum(from, p)))
      throw std::invalid_argument("transversal " + to_string(t) + " contains " +
                                  to_string(direct_sum(from, p)));
  if (symmetric && !t.is_symmetric()) throw std::invalid_argument("transversal is not symmetric");

  PatternTransfer out;
  out.coloring = color_board(t, transfer_patterns(tau, symmetric));
  const Partition& mu = out.coloring.reduced_shape;
  TransversalMap inner = forward ? increasing_to_decreasing(mu, k) : decreasing_to_increasing(mu, k);
  out.reduced_image = out.coloring.kept_columns.empty() ? out.coloring.reduced : inner(out.coloring.reduced);
  out.image = restore_board(t, out.coloring, out.reduced_image);
  return out;
}

}  // namespace

PatternTransfer pattern_transfer(const Transversal& t, int k, const Permutation& tau, bool symmetric) {
  return transfer(t, k, tau, symmetric, true);
}

PatternTransfer pattern_transfer_inverse(const Transversal& t, int k, const Permutation& tau,
                                         bool symmetric) {
  return transfer(t, k, tau, symmetric, false);
}

ClassCount class_count(PermutationClass cls, int n, const std::vector<Permutation>& avoid,
                       Statistic stat) {
  ClassCount out;
  for_each_in_class(cls, n, [&](const Permutation& p) {
    if (!avoids(p, avoid)) return;
    ++out.count;
    out.distribution.add(statistic(p, stat));
  });
  return out;
}

ClassCount transversal_count(const Partition& shape, bool symmetric,
                             const std::vector<Permutation>& avoid, Statistic stat) {
  ClassCount out;
  if (!has_transversal(shape)) return out;
  for_each_transversal(shape, symmetric, [&](const Transversal& t) {
    if (!avoids(t, avoid)) return;
    ++out.count;
    out.distribution.add(statistic(t, stat));
  });
  return out;
}

ClassCount transversal_count(int n, bool symmetric, const std::vector<Permutation>& avoid,
                             Statistic stat) {
  ClassCount out;
  for (const Partition& lambda : admissible_shapes(n)) {
    if (symmetric && !is_self_conjugate(lambda)) continue;
    ClassCount part = transversal_count(lambda, symmetric, avoid, stat);
    out.count += part.count;
    out.distribution.add(part.distribution);
  }
  return out;
}

}  // namespace peakval

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "peakval/index_set.hpp"

namespace peakval {

struct PeakValley {
  IndexSet peak;
  IndexSet valley;
  friend bool operator==(const PeakValley&, const PeakValley&) = default;
};

enum class Statistic { peak, valley, tilde_peak, tilde_valley };

Statistic parse_statistic(const std::string& name);
std::string to_string(Statistic s);

// Formal sum of monomials t^A, one variable t_i per element of A.
// Equivalently a multiset of index sets.
class SetPolynomial {
 public:
  using Terms = std::map<IndexSet, std::uint64_t>;

  void add(IndexSet s, std::uint64_t coefficient = 1);
  void add(const SetPolynomial& other);
  std::uint64_t coefficient(IndexSet s) const;
  std::uint64_t total() const;
  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }

  friend bool operator==(const SetPolynomial&, const SetPolynomial&) = default;

 private:
  Terms terms_;
};

// Sum of t^A q^B.
class JointSetPolynomial {
 public:
  using Key = std::pair<IndexSet, IndexSet>;
  using Terms = std::map<Key, std::uint64_t>;

  void add(IndexSet a, IndexSet b, std::uint64_t coefficient = 1);
  void add(const JointSetPolynomial& other);
  std::uint64_t coefficient(IndexSet a, IndexSet b) const;
  std::uint64_t total() const;
  const Terms& terms() const noexcept { return terms_; }

  // Exchange the roles of t and q.
  JointSetPolynomial swapped() const;
  SetPolynomial first_marginal() const;
  SetPolynomial second_marginal() const;

  friend bool operator==(const JointSetPolynomial&, const JointSetPolynomial&) = default;

 private:
  Terms terms_;
};

// Intersect every set with `keep` and merge.
SetPolynomial restrict(const SetPolynomial& p, IndexSet keep);

// Terms in increasing lexicographic order of their index sets, coefficient 1
// omitted, e.g. "t3 + 2*t2*t4".
std::string render(const SetPolynomial& p, char variable = 't');
std::string render(const JointSetPolynomial& p, char first = 't', char second = 'q');

template <class T>
IndexSet statistic(const T& object, Statistic stat) {
  switch (stat) {
    case Statistic::peak:
      return peak_valley(object).peak;
    case Statistic::valley:
      return peak_valley(object).valley;
    case Statistic::tilde_peak:
    case Statistic::tilde_valley:
      if constexpr (requires { tilde_peak_valley(object); }) {
        auto pv = tilde_peak_valley(object);
        return stat == Statistic::tilde_peak ? pv.peak : pv.valley;
      } else {
        throw std::invalid_argument("tilde statistics are defined only for transversals");
      }
  }
  throw std::invalid_argument("unknown statistic");
}

template <class Range>
SetPolynomial distribution(const Range& objects, Statistic stat) {
  SetPolynomial p;
  for (const auto& x : objects) p.add(statistic(x, stat));
  return p;
}

template <class Range>
JointSetPolynomial joint_distribution(const Range& objects) {
  JointSetPolynomial p;
  for (const auto& x : objects) {
    PeakValley pv = peak_valley(x);
    p.add(pv.peak, pv.valley);
  }
  return p;
}

}  // namespace peakval

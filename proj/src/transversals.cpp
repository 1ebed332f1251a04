#include "peakval/transversals.hpp"

#include <algorithm>
#include <stdexcept>

namespace peakval {

Transversal::Transversal(Partition shape, std::vector<int> word)
    : shape_(std::move(shape)), word_(std::move(word)) {
  const int n = shape_.length();
  if (!is_admissible(shape_))
    throw std::invalid_argument("shape " + to_string(shape_) + " is not admissible");
  if (static_cast<int>(word_.size()) != n)
    throw std::invalid_argument("transversal word length differs from column count");
  std::vector<char> used(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int r = word_[i - 1];
    if (r < 1 || r > n || used[r]) throw std::invalid_argument("transversal rows must be distinct");
    if (r > shape_.column(i))
      throw std::invalid_argument("cell (" + std::to_string(i) + "," + std::to_string(r) +
                                  ") lies outside the shape");
    used[r] = 1;
  }
}

bool Transversal::is_symmetric() const {
  if (!is_self_conjugate(shape_)) return false;
  for (int i = 0; i < size(); ++i)
    if (word_[word_[i] - 1] != i + 1) return false;
  return true;
}

std::vector<Cell> Transversal::ones() const {
  std::vector<Cell> out;
  for (int i = 0; i < size(); ++i) out.push_back({i + 1, word_[i]});
  return out;
}

PeakValley peak_valley(const Transversal& t) {
  PeakValley raw = strict_peak_valley(t.word()), out;
  const auto& lambda = t.shape();
  for (int i = 2; i < t.size(); ++i) {
    if (lambda.column(i - 1) != lambda.column(i) || lambda.column(i) != lambda.column(i + 1)) continue;
    if (raw.peak.contains(i)) out.peak.insert(i);
    if (raw.valley.contains(i)) out.valley.insert(i);
  }
  return out;
}

PeakValley tilde_peak_valley(const Transversal& t) {
  PeakValley pv = peak_valley(t), out;
  auto labels = column_step_labels(t.shape());
  for (int i : pv.peak.elements()) out.peak.insert(labels[i - 1]);
  for (int i : pv.valley.elements()) out.valley.insert(labels[i - 1]);
  return out;
}

bool contains_pattern(const Transversal& t, const Permutation& pattern) {
  auto bound = column_lengths(t.shape());
  return contains_pattern_bounded(t.word(), pattern, bound);
}

bool avoids(const Transversal& t, const std::vector<Permutation>& patterns) {
  for (const auto& p : patterns)
    if (contains_pattern(t, p)) return false;
  return true;
}

namespace {

struct TransversalSearch {
  const Partition& shape;
  bool symmetric;
  const std::function<void(const Transversal&)>& visit;
  std::vector<int> cols;
  std::vector<int> word;
  std::vector<char> used;

  void run(int i) {
    const int n = shape.length();
    if (i > n) {
      visit(Transversal(shape, word));
      return;
    }
    if (word[i - 1] != 0) {
      run(i + 1);
      return;
    }
    for (int r = symmetric ? i : 1; r <= cols[i - 1]; ++r) {
      if (used[r]) continue;
      if (symmetric && r != i && word[r - 1] != 0) continue;
      used[r] = 1;
      word[i - 1] = r;
      if (symmetric && r != i) {
        used[i] = 1;
        word[r - 1] = i;
      }
      run(i + 1);
      if (symmetric && r != i) {
        used[i] = 0;
        word[r - 1] = 0;
      }
      word[i - 1] = 0;
      used[r] = 0;
    }
  }
};

}  // namespace

void for_each_transversal(const Partition& shape, bool symmetric_only,
                          const std::function<void(const Transversal&)>& visit) {
  if (!is_admissible(shape))
    throw std::invalid_argument("shape " + to_string(shape) + " is not admissible");
  if (symmetric_only && !is_self_conjugate(shape))
    throw std::invalid_argument("symmetric transversals need a self-conjugate shape");
  const int n = shape.length();
  TransversalSearch s{shape, symmetric_only, visit, column_lengths(shape), std::vector<int>(n, 0),
                      std::vector<char>(n + 1, 0)};
  s.run(1);
}

std::vector<Transversal> enumerate_transversals(const Partition& shape, bool symmetric_only) {
  std::vector<Transversal> out;
  for_each_transversal(shape, symmetric_only, [&](const Transversal& t) { out.push_back(t); });
  return out;
}

void for_each_transversal_of_size(int n, bool symmetric_only,
                                  const std::function<void(const Transversal&)>& visit) {
  for (const Partition& lambda : admissible_shapes(n)) {
    if (!has_transversal(lambda)) continue;
    if (symmetric_only && !is_self_conjugate(lambda)) continue;
    for_each_transversal(lambda, symmetric_only, visit);
  }
}

BoardColoring color_board(const Transversal& t, const std::vector<Permutation>& patterns) {
  const Partition& lambda = t.shape();
  const int n = t.size();
  auto cols = column_lengths(lambda);
  auto is_white = [&](int c, int r) {
    std::vector<int> values, bound;
    for (int i = c + 1; i <= n; ++i) {
      if (t[i] <= r) continue;
      values.push_back(t[i] - r);
      bound.push_back(cols[i - 1] - r);
    }
    for (const auto& p : patterns)
      if (contains_pattern_bounded(values, p, bound)) return true;
    return false;
  };

  std::vector<std::vector<char>> white(n + 1, std::vector<char>(n + 1, 0));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= lambda.row(r); ++c) white[c][r] = is_white(c, r);

  BoardColoring out;
  for (int c = 1; c <= n; ++c)
    if (white[c][t[c]]) {
      out.kept_columns.push_back(c);
      out.kept_rows.push_back(t[c]);
    }
  std::sort(out.kept_rows.begin(), out.kept_rows.end());

  std::vector<int> parts;
  for (int r : out.kept_rows) {
    int len = 0;
    for (int c : out.kept_columns) {
      if (!white[c][r]) break;
      out.white.push_back({c, r});
      ++len;
    }
    for (std::size_t q = len; q < out.kept_columns.size(); ++q)
      if (white[out.kept_columns[q]][r])
        throw std::logic_error("white cells of a row are not left justified");
    parts.push_back(len);
  }
  std::sort(out.white.begin(), out.white.end());
  out.reduced_shape = Partition::trimmed(parts);

  std::vector<int> reduced_word;
  for (int c : out.kept_columns) {
    auto it = std::lower_bound(out.kept_rows.begin(), out.kept_rows.end(), t[c]);
    reduced_word.push_back(static_cast<int>(it - out.kept_rows.begin()) + 1);
  }
  out.reduced = Transversal(out.reduced_shape, std::move(reduced_word));
  return out;
}

Transversal restore_board(const Transversal& t, const BoardColoring& coloring,
                          const Transversal& reduced_image) {
  if (reduced_image.shape() != coloring.reduced_shape)
    throw std::invalid_argument("image has a different shape than the reduced board");
  std::vector<int> word = t.word();
  for (std::size_t j = 0; j < coloring.kept_columns.size(); ++j)
    word[coloring.kept_columns[j] - 1] = coloring.kept_rows[reduced_image.word()[j] - 1];
  return Transversal(t.shape(), std::move(word));
}

Transversal recolor_apply(const Transversal& t, const std::vector<Permutation>& patterns,
                          const TransversalMap& inner) {
  BoardColoring coloring = color_board(t, patterns);
  if (coloring.kept_columns.empty()) return t;
  return restore_board(t, coloring, inner(coloring.reduced));
}

std::string to_string(const Transversal& t) {
  return to_string(t.as_permutation()) + " on " + to_string(t.shape());
}

}  // namespace peakval

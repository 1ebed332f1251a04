#include "peakval/tableaux.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <stdexcept>

namespace peakval {

bool YamanouchiWord::is_valid(const SkewShape& shape, std::span<const int> letters) {
  const int k = shape.rows();
  if (static_cast<int>(letters.size()) != shape.size()) return false;
  std::vector<int> end(k + 2, 0);
  for (int r = 1; r <= k; ++r) end[r] = shape.inner().row(r);
  for (int y : letters) {
    if (y < 1 || y > k) return false;
    ++end[y];
    if (end[y] > shape.outer().row(y)) return false;
    if (y > 1 && end[y] > end[y - 1]) return false;
  }
  return true;
}

YamanouchiWord::YamanouchiWord(SkewShape shape, std::vector<int> letters)
    : shape_(std::move(shape)), letters_(std::move(letters)) {
  if (!is_valid(shape_, letters_))
    throw std::invalid_argument("not a Yamanouchi word of shape " + to_string(shape_));
}

PeakValley word_peak_valley(std::span<const int> y) {
  PeakValley pv;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (y[i - 1] < y[i] && y[i] >= y[i + 1]) pv.peak.insert(static_cast<int>(i) + 1);
    if (y[i - 1] >= y[i] && y[i] < y[i + 1]) pv.valley.insert(static_cast<int>(i) + 1);
  }
  return pv;
}

PeakValley peak_valley(const YamanouchiWord& y) { return word_peak_valley(y.letters()); }

StandardTableau::StandardTableau(SkewShape shape, const std::vector<std::vector<int>>& rows)
    : shape_(std::move(shape)) {
  const int n = shape_.size();
  if (static_cast<int>(rows.size()) > shape_.rows())
    throw std::invalid_argument("more rows than the shape has");
  row_of_.assign(n, 0);
  for (int r = 1; r <= shape_.rows(); ++r) {
    static const std::vector<int> none;
    const auto& row = r <= static_cast<int>(rows.size()) ? rows[r - 1] : none;
    if (static_cast<int>(row.size()) != shape_.row_length(r))
      throw std::invalid_argument("row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < row.size(); ++c) {
      int e = row[c];
      if (e < 1 || e > n || row_of_[e - 1] != 0)
        throw std::invalid_argument("entries must be 1..n, each once");
      if (c > 0 && row[c - 1] > e) throw std::invalid_argument("rows must increase");
      row_of_[e - 1] = r;
    }
  }
  if (!YamanouchiWord::is_valid(shape_, row_of_))
    throw std::invalid_argument("columns must increase");
}

StandardTableau StandardTableau::from_row_word(const YamanouchiWord& y) {
  StandardTableau t;
  t.shape_ = y.shape();
  t.row_of_ = y.letters();
  return t;
}

std::vector<std::vector<int>> StandardTableau::rows() const {
  std::vector<std::vector<int>> out(shape_.rows());
  for (int e = 1; e <= size(); ++e) out[row_of_[e - 1] - 1].push_back(e);
  return out;
}

Cell StandardTableau::cell_of(int entry) const {
  int r = row_of(entry);
  int before = 0;
  for (int e = 1; e < entry; ++e) before += row_of_[e - 1] == r;
  return {shape_.inner().row(r) + before + 1, r};
}

bool StandardTableau::is_descent(int i) const {
  return i >= 1 && i < size() && row_of_[i] > row_of_[i - 1];
}

IndexSet descent_set(const StandardTableau& t) {
  IndexSet d;
  for (int i = 1; i < t.size(); ++i)
    if (t.is_descent(i)) d.insert(i);
  return d;
}

PeakValley peak_valley(const StandardTableau& t) {
  PeakValley pv;
  for (int i = 2; i < t.size(); ++i) {
    bool prev = t.is_descent(i - 1), cur = t.is_descent(i);
    if (!prev && cur) pv.peak.insert(i);
    if (prev && !cur) pv.valley.insert(i);
  }
  return pv;
}

YamanouchiWord to_yamanouchi_word(const StandardTableau& t) {
  return YamanouchiWord(t.shape(), t.row_word());
}

StandardTableau to_tableau(const YamanouchiWord& y) { return StandardTableau::from_row_word(y); }

namespace {

std::vector<int> block_ends(const SkewShape& shape) {
  std::vector<int> ends(shape.rows() + 1, 0);
  for (int r = 1; r <= shape.rows(); ++r) ends[r] = ends[r - 1] + shape.row_length(r);
  return ends;
}

}  // namespace

Permutation word_to_permutation(const YamanouchiWord& y) {
  std::vector<int> next = block_ends(y.shape());
  std::vector<int> w;
  w.reserve(y.size());
  for (int letter : y.letters()) w.push_back(next[letter]--);
  return Permutation(std::move(w));
}

YamanouchiWord permutation_to_word(const Permutation& pi, const SkewShape& shape) {
  if (pi.size() != shape.size()) throw std::invalid_argument("permutation size differs from shape");
  std::vector<int> ends = block_ends(shape);
  std::vector<int> letters, last(shape.rows() + 1, 0);
  for (int v : pi.word()) {
    int r = static_cast<int>(std::lower_bound(ends.begin() + 1, ends.end(), v) - ends.begin());
    if (last[r] != 0 && last[r] < v)
      throw std::invalid_argument("values of one row block must decrease left to right");
    last[r] = v;
    letters.push_back(r);
  }
  return YamanouchiWord(shape, std::move(letters));
}

Permutation to_yamanouchi_permutation(const StandardTableau& t) { return word_to_permutation(to_yamanouchi_word(t)); }

StandardTableau to_tableau(const Permutation& pi, const SkewShape& shape) {
  return to_tableau(permutation_to_word(pi, shape));
}

namespace {

struct YamanouchiSearch {
  const SkewShape& shape;
  std::vector<int> end;
  std::vector<int> letters;
  int k;

  template <class Emit>
  void run(Emit&& emit) {
    if (static_cast<int>(letters.size()) == shape.size()) {
      emit();
      return;
    }
    for (int r = 1; r <= k; ++r) {
      if (end[r] >= shape.outer().row(r)) continue;
      if (r > 1 && end[r] + 1 > end[r - 1]) continue;
      ++end[r];
      letters.push_back(r);
      run(emit);
      letters.pop_back();
      --end[r];
    }
  }
};

}  // namespace

void for_each_yamanouchi(const SkewShape& shape,
                         const std::function<void(const YamanouchiWord&)>& visit) {
  YamanouchiSearch s{shape, std::vector<int>(shape.rows() + 2, 0), {}, shape.rows()};
  for (int r = 1; r <= s.k; ++r) s.end[r] = shape.inner().row(r);
  s.run([&] { visit(YamanouchiWord(YamanouchiWord::trusted{}, shape, s.letters)); });
}

std::vector<YamanouchiWord> enumerate_yamanouchi(const SkewShape& shape) {
  std::vector<YamanouchiWord> out;
  for_each_yamanouchi(shape, [&](const YamanouchiWord& y) { out.push_back(y); });
  return out;
}

std::vector<StandardTableau> enumerate_syt(const SkewShape& shape) {
  std::vector<StandardTableau> out;
  for_each_yamanouchi(shape,
                      [&](const YamanouchiWord& y) { out.push_back(StandardTableau::from_row_word(y)); });
  return out;
}

bool is_knuth_move_defined(const StandardTableau& t, int i) {
  if (i < 2 || i > t.size() - 1) return false;
  return t.is_descent(i - 1) != t.is_descent(i);
}

StandardTableau knuth_move(const StandardTableau& t, int i) {
  if (!is_knuth_move_defined(t, i))
    throw std::domain_error("Knuth move undefined at index " + std::to_string(i));
  bool valley = t.is_descent(i - 1);
  bool next_lower = t.row_of(i + 1) > t.row_of(i - 1);
  // Valley: swap i-1,i when i+1 is lower than i-1, else i,i+1.
  // Peak: swap i-1,i when i+1 is not lower than i-1, else i,i+1.
  int a = (valley == next_lower) ? i - 1 : i;
  std::vector<int> w = t.row_word();
  std::swap(w[a - 1], w[a]);
  return StandardTableau::from_row_word(YamanouchiWord(t.shape(), std::move(w)));
}

std::vector<StandardTableau> knuth_class(const StandardTableau& t) {
  std::set<StandardTableau> seen{t};
  std::deque<StandardTableau> queue{t};
  while (!queue.empty()) {
    StandardTableau cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 2; i < cur.size(); ++i) {
      if (!is_knuth_move_defined(cur, i)) continue;
      StandardTableau next = knuth_move(cur, i);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

int row_insert(RowTableau& t, int x) {
  for (std::size_t r = 0; r < t.size(); ++r) {
    auto it = std::upper_bound(t[r].begin(), t[r].end(), x);
    if (it == t[r].end()) {
      t[r].push_back(x);
      return static_cast<int>(r) + 1;
    }
    std::swap(*it, x);
  }
  t.push_back({x});
  return static_cast<int>(t.size());
}

int reverse_bump(RowTableau& t, int row) {
  if (row < 1 || row > static_cast<int>(t.size()) ||
      (row < static_cast<int>(t.size()) && t[row].size() >= t[row - 1].size()))
    throw std::invalid_argument("row " + std::to_string(row) + " does not end in a corner");
  int x = t[row - 1].back();
  t[row - 1].pop_back();
  if (t[row - 1].empty()) t.pop_back();
  for (int r = row - 2; r >= 0; --r) {
    auto it = std::lower_bound(t[r].begin(), t[r].end(), x);
    --it;
    std::swap(*it, x);
  }
  return x;
}

Partition shape_of(const RowTableau& t) {
  std::vector<int> parts;
  for (const auto& row : t) parts.push_back(static_cast<int>(row.size()));
  return Partition::trimmed(std::move(parts));
}

RskPair rsk(const Permutation& pi) {
  RowTableau p;
  std::vector<int> q_rows;
  for (int v : pi.word()) q_rows.push_back(row_insert(p, v));
  Partition sh = shape_of(p);
  StandardTableau recording = StandardTableau::from_row_word(YamanouchiWord(SkewShape(sh), q_rows));
  return {StandardTableau(SkewShape(sh), p), recording};
}

Permutation rsk_inverse(const StandardTableau& insertion, const StandardTableau& recording) {
  if (!insertion.shape().straight() || insertion.shape() != recording.shape())
    throw std::invalid_argument("RSK inverse needs two straight tableaux of one shape");
  RowTableau p = insertion.rows();
  std::vector<int> w(insertion.size());
  for (int e = recording.size(); e >= 1; --e) w[e - 1] = reverse_bump(p, recording.row_of(e));
  return Permutation(std::move(w));
}

namespace {

struct PairingTable {
  std::vector<std::vector<int>> words;
  std::map<std::vector<int>, int> index;
  std::vector<int> forward, backward;
};

std::shared_ptr<const PairingTable> build_pairing_table(const SkewShape& shape) {
  auto table = std::make_shared<PairingTable>();
  for_each_yamanouchi(shape, [&](const YamanouchiWord& y) { table->words.push_back(y.letters()); });
  const int m = static_cast<int>(table->words.size());
  std::vector<PeakValley> pv(m);
  std::vector<int> by_valley(m), by_peak(m);
  for (int i = 0; i < m; ++i) {
    table->index[table->words[i]] = i;
    pv[i] = word_peak_valley(table->words[i]);
    by_valley[i] = by_peak[i] = i;
  }
  // Words are already in lexicographic order, so a stable sort by the set
  // key leaves ties ordered by the word.
  std::stable_sort(by_valley.begin(), by_valley.end(),
                   [&](int a, int b) { return pv[a].valley < pv[b].valley; });
  std::stable_sort(by_peak.begin(), by_peak.end(),
                   [&](int a, int b) { return pv[a].peak < pv[b].peak; });
  table->forward.assign(m, -1);
  table->backward.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    if (pv[by_valley[i]].valley != pv[by_peak[i]].peak)
      throw std::logic_error("valley and peak multisets differ on shape " + to_string(shape));
    table->forward[by_valley[i]] = by_peak[i];
    table->backward[by_peak[i]] = by_valley[i];
  }
  return table;
}

std::shared_ptr<const PairingTable> pairing_table(const SkewShape& shape) {
  static std::shared_mutex mutex;
  static std::map<SkewShape, std::shared_ptr<const PairingTable>> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(shape);
    if (it != cache.end()) return it->second;
  }
  auto table = build_pairing_table(shape);
  std::unique_lock lock(mutex);
  return cache.emplace(shape, std::move(table)).first->second;
}

YamanouchiWord apply_pairing(const YamanouchiWord& y, bool inverse) {
  auto table = pairing_table(y.shape());
  auto it = table->index.find(y.letters());
  if (it == table->index.end()) throw std::logic_error("word missing from its shape table");
  int j = inverse ? table->backward[it->second] : table->forward[it->second];
  return YamanouchiWord(y.shape(), table->words[j]);
}

}  // namespace

YamanouchiWord pair_valley_to_peak(const YamanouchiWord& y) { return apply_pairing(y, false); }
YamanouchiWord pair_peak_to_valley(const YamanouchiWord& y) { return apply_pairing(y, true); }

}  // namespace peakval

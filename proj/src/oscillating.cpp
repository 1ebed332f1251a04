#include "peakval/oscillating.hpp"

#include <algorithm>
#include <stdexcept>

namespace peakval {

namespace {

// Row where `to` differs from `from` by one square, or 0.
int single_square_row(const Partition& from, const Partition& to) {
  if (to.size() != from.size() + 1) return 0;
  int row = 0;
  for (int r = 1; r <= to.length(); ++r) {
    int d = to.row(r) - from.row(r);
    if (d == 1 && row == 0)
      row = r;
    else if (d != 0)
      return 0;
  }
  return row;
}

}  // namespace

OscillatingTableau::OscillatingTableau(std::vector<Partition> shapes) : shapes_(std::move(shapes)) {
  if (shapes_.empty() || !shapes_.front().empty())
    throw std::invalid_argument("oscillating tableau must start at the empty shape");
  for (std::size_t i = 1; i < shapes_.size(); ++i)
    if (!single_square_row(shapes_[i - 1], shapes_[i]) && !single_square_row(shapes_[i], shapes_[i - 1]))
      throw std::invalid_argument("shapes " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                  " differ by more than one square");
}

OscillatingTableau OscillatingTableau::reversed() const {
  if (!closed()) throw std::invalid_argument("only tableaux ending empty can be reversed");
  return OscillatingTableau(std::vector<Partition>(shapes_.rbegin(), shapes_.rend()));
}

Step step_at(const OscillatingTableau& o, int i) {
  const Partition &a = o[i - 1], &b = o[i];
  if (int r = single_square_row(a, b)) return {true, r};
  return {false, single_square_row(b, a)};
}

BarredWord barred_word(const OscillatingTableau& o) {
  BarredWord y;
  for (int i = 1; i <= o.length(); ++i) {
    Step s = step_at(o, i);
    y.push_back(s.added ? s.row : -s.row);
  }
  return y;
}

OscillatingTableau from_barred_word(const BarredWord& y) {
  std::vector<Partition> shapes{Partition{}};
  for (int letter : y) {
    if (letter == 0) throw std::invalid_argument("barred word letters are nonzero");
    const Partition& cur = shapes.back();
    shapes.push_back(letter > 0 ? cur.with_cell_added(letter) : cur.with_cell_removed(-letter));
  }
  return OscillatingTableau(std::move(shapes));
}

std::string to_string(const BarredWord& y) {
  std::string out;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i) out += ' ';
    out += y[i] > 0 ? std::to_string(y[i]) : std::to_string(-y[i]) + "'";
  }
  return out;
}

PeakValley peak_valley(const OscillatingTableau& o) {
  BarredWord y = barred_word(o);
  PeakValley pv;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (y[i - 1] < 0 || y[i] < 0 || y[i + 1] < 0) continue;
    if (y[i - 1] < y[i] && y[i] >= y[i + 1]) pv.peak.insert(static_cast<int>(i) + 1);
    if (y[i - 1] >= y[i] && y[i] < y[i + 1]) pv.valley.insert(static_cast<int>(i) + 1);
  }
  return pv;
}

int max_rows(const OscillatingTableau& o) {
  int best = 0;
  for (const auto& s : o.shapes()) best = std::max(best, s.length());
  return best;
}

int max_columns(const OscillatingTableau& o) {
  int best = 0;
  for (const auto& s : o.shapes()) best = std::max(best, s.row(1));
  return best;
}

namespace {

// Deletes the largest entry, which sits at the end of some row.
void remove_entry(RowTableau& t, int value) {
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (t[r].back() != value) continue;
    if (r + 1 < t.size() && t[r + 1].size() == t[r].size())
      throw std::logic_error("entry to delete is not in a corner");
    t[r].pop_back();
    if (t[r].empty()) t.pop_back();
    return;
  }
  throw std::logic_error("entry to delete is not at a row end");
}

}  // namespace

OscillatingTableau to_oscillating(const Matching& m) {
  const int len = m.points();
  std::vector<Partition> shapes(len + 1);
  RowTableau t;
  for (int j = len; j >= 1; --j) {
    if (m.is_opener(j))
      remove_entry(t, j);
    else
      row_insert(t, m.partner(j));
    shapes[j - 1] = shape_of(t);
  }
  return OscillatingTableau(std::move(shapes));
}

OscillatingTableau to_oscillating_ascending(const Matching& m) {
  const int len = m.points();
  std::vector<Partition> shapes{Partition{}};
  RowTableau t;
  for (int j = 1; j <= len; ++j) {
    if (m.is_opener(j))
      row_insert(t, len + 1 - m.partner(j));
    else
      remove_entry(t, len + 1 - j);
    shapes.push_back(shape_of(t));
  }
  return OscillatingTableau(std::move(shapes));
}

Matching to_matching(const OscillatingTableau& o) {
  if (!o.closed()) throw std::invalid_argument("oscillating tableau must end at the empty shape");
  RowTableau t;
  std::vector<Arc> arcs;
  for (int j = 1; j <= o.length(); ++j) {
    Step s = step_at(o, j);
    if (s.added) {
      if (s.row > static_cast<int>(t.size())) t.emplace_back();
      t[s.row - 1].push_back(j);
    } else {
      arcs.push_back({reverse_bump(t, s.row), j});
    }
  }
  return Matching(std::move(arcs));
}

OscillatingTableau conjugate_shapes(const OscillatingTableau& o) {
  std::vector<Partition> shapes;
  for (const auto& s : o.shapes()) shapes.push_back(conjugate(s));
  return OscillatingTableau(std::move(shapes));
}

std::vector<Run> decompose(const OscillatingTableau& o) {
  if (!o.closed()) throw std::invalid_argument("oscillating tableau must end at the empty shape");
  std::vector<Run> runs;
  for (int i = 1; i <= o.length(); ++i) {
    bool added = step_at(o, i).added;
    if (runs.empty() || runs.back().addition != added) runs.push_back({added, {o[i - 1]}});
    runs.back().chain.push_back(o[i]);
  }
  return runs;
}

OscillatingTableau recompose(const std::vector<Run>& runs) {
  std::vector<Partition> shapes{Partition{}};
  for (const Run& run : runs) {
    if (run.chain.empty() || run.chain.front() != shapes.back())
      throw std::invalid_argument("runs do not join up");
    shapes.insert(shapes.end(), run.chain.begin() + 1, run.chain.end());
  }
  return OscillatingTableau(std::move(shapes));
}

YamanouchiWord run_word(const Run& run) {
  if (!run.addition) throw std::invalid_argument("expected an addition run");
  std::vector<int> letters;
  for (std::size_t i = 1; i < run.chain.size(); ++i) {
    int r = single_square_row(run.chain[i - 1], run.chain[i]);
    if (!r) throw std::invalid_argument("addition run steps must add one square");
    letters.push_back(r);
  }
  return YamanouchiWord(SkewShape(run.chain.back(), run.chain.front()), std::move(letters));
}

Run run_from_word(const YamanouchiWord& y) {
  Run run{true, {y.shape().inner()}};
  for (int r : y.letters()) run.chain.push_back(run.chain.back().with_cell_added(r));
  return run;
}

YamanouchiWord deletion_run_word(const Run& run) {
  if (run.addition) throw std::invalid_argument("expected a deletion run");
  return run_word({true, std::vector<Partition>(run.chain.rbegin(), run.chain.rend())});
}

Run deletion_run_from_word(const YamanouchiWord& y) {
  Run run = run_from_word(y);
  std::reverse(run.chain.begin(), run.chain.end());
  run.addition = false;
  return run;
}

namespace {

OscillatingTableau map_runs(const OscillatingTableau& o,
                            YamanouchiWord (*f)(const YamanouchiWord&)) {
  std::vector<Run> runs = decompose(o);
  for (Run& run : runs)
    run = run.addition ? run_from_word(f(run_word(run))) : deletion_run_from_word(f(deletion_run_word(run)));
  return recompose(runs);
}

}  // namespace

OscillatingTableau exchange_runs(const OscillatingTableau& o) { return map_runs(o, &pair_valley_to_peak); }
OscillatingTableau exchange_runs_inverse(const OscillatingTableau& o) { return map_runs(o, &pair_peak_to_valley); }

namespace {

void oscillating_rec(int remaining, std::vector<Partition>& shapes,
                     const std::function<void(const OscillatingTableau&)>& visit) {
  const Partition cur = shapes.back();
  if (remaining == 0) {
    if (cur.empty()) visit(OscillatingTableau(shapes));
    return;
  }
  for (int r = 1; r <= cur.length() + 1; ++r) {
    if (cur.can_add(r) && cur.size() + 1 <= remaining - 1) {
      shapes.push_back(cur.with_cell_added(r));
      oscillating_rec(remaining - 1, shapes, visit);
      shapes.pop_back();
    }
    if (cur.can_remove(r)) {
      shapes.push_back(cur.with_cell_removed(r));
      oscillating_rec(remaining - 1, shapes, visit);
      shapes.pop_back();
    }
  }
}

}  // namespace

void for_each_oscillating(int n, const std::function<void(const OscillatingTableau&)>& visit) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<Partition> shapes{Partition{}};
  oscillating_rec(2 * n, shapes, visit);
}

std::string to_string(const OscillatingTableau& o) {
  std::string out;
  for (std::size_t i = 0; i < o.shapes().size(); ++i) {
    if (i) out += ' ';
    out += o.shapes()[i].empty() ? "()" : to_string(o.shapes()[i]);
  }
  return out;
}

}  // namespace peakval

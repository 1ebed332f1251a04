#include "peakval/matchings.hpp"

#include <algorithm>
#include <stdexcept>

namespace peakval {

Matching::Matching(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  const int m = points();
  partner_.assign(m, 0);
  for (Arc& a : arcs_) {
    if (a.opener > a.closer) std::swap(a.opener, a.closer);
    if (a.opener < 1 || a.closer > m || a.opener == a.closer || partner_[a.opener - 1] ||
        partner_[a.closer - 1])
      throw std::invalid_argument("arcs do not form a perfect matching of 1.." + std::to_string(m));
    partner_[a.opener - 1] = a.closer;
    partner_[a.closer - 1] = a.opener;
  }
  std::sort(arcs_.begin(), arcs_.end());
}

Matching::Matching(const std::vector<std::pair<int, int>>& arcs)
    : Matching([&] {
        std::vector<Arc> v;
        for (auto [i, j] : arcs) v.push_back({i, j});
        return v;
      }()) {}

std::string Matching::type() const {
  std::string out;
  for (int p = 1; p <= points(); ++p) out += is_opener(p) ? 'u' : 'd';
  return out;
}

Matching Matching::reversed() const {
  const int m = points();
  std::vector<Arc> v;
  for (const Arc& a : arcs_) v.push_back({m + 1 - a.closer, m + 1 - a.opener});
  return Matching(std::move(v));
}

PeakValley peak_valley(const Matching& m) {
  PeakValley pv;
  for (int i = 2; i < m.points(); ++i) {
    if (!m.is_opener(i - 1) || !m.is_opener(i) || !m.is_opener(i + 1)) continue;
    int a = m.partner(i - 1), b = m.partner(i), c = m.partner(i + 1);
    if (a < b && b > c) pv.peak.insert(i);
    if (a > b && b < c) pv.valley.insert(i);
  }
  return pv;
}

namespace {

// Longest strictly monotone run of closers taken in opener order.
int longest_chain(const std::vector<int>& closers, bool increasing) {
  std::vector<int> tails;
  for (int x : closers) {
    int key = increasing ? x : -x;
    auto it = std::lower_bound(tails.begin(), tails.end(), key);
    if (it == tails.end())
      tails.push_back(key);
    else
      *it = key;
  }
  return static_cast<int>(tails.size());
}

}  // namespace

int max_crossing(const Matching& m) {
  int best = 0;
  const auto& arcs = m.arcs();
  for (std::size_t s = 0; s < arcs.size(); ++s) {
    std::vector<int> closers;
    for (std::size_t t = s + 1; t < arcs.size(); ++t)
      if (arcs[t].opener < arcs[s].closer && arcs[t].closer > arcs[s].closer)
        closers.push_back(arcs[t].closer);
    best = std::max(best, 1 + longest_chain(closers, true));
  }
  return best;
}

int max_nesting(const Matching& m) {
  std::vector<int> closers;
  for (const Arc& a : m.arcs()) closers.push_back(a.closer);
  return longest_chain(closers, false);
}

namespace {

void matchings_rec(std::vector<int>& partner, std::vector<Arc>& arcs,
                   const std::function<void(const Matching&)>& visit) {
  const int m = static_cast<int>(partner.size());
  int i = 0;
  while (i < m && partner[i]) ++i;
  if (i == m) {
    visit(Matching(arcs));
    return;
  }
  for (int j = i + 1; j < m; ++j) {
    if (partner[j]) continue;
    partner[i] = j + 1;
    partner[j] = i + 1;
    arcs.push_back({i + 1, j + 1});
    matchings_rec(partner, arcs, visit);
    arcs.pop_back();
    partner[i] = partner[j] = 0;
  }
}

}  // namespace

void for_each_matching(int n, const std::function<void(const Matching&)>& visit) {
  if (n < 0) throw std::invalid_argument("negative matching size");
  std::vector<int> partner(2 * n, 0);
  std::vector<Arc> arcs;
  matchings_rec(partner, arcs, visit);
}

std::vector<Matching> enumerate_matchings(int n) {
  std::vector<Matching> out;
  for_each_matching(n, [&](const Matching& m) { out.push_back(m); });
  return out;
}

Matching to_matching(const Transversal& t) {
  auto col_labels = column_step_labels(t.shape());
  auto row_labels = row_step_labels(t.shape());
  std::vector<Arc> arcs;
  for (int i = 1; i <= t.size(); ++i) arcs.push_back({col_labels[i - 1], row_labels[t[i] - 1]});
  return Matching(std::move(arcs));
}

Transversal to_transversal(const Matching& m) {
  Partition lambda = shape_from_type(m.type());
  const int n = m.size();
  std::vector<int> opener_rank(m.points() + 1, 0), closer_rank(m.points() + 1, 0);
  int o = 0, c = 0;
  for (int p = 1; p <= m.points(); ++p)
    if (m.is_opener(p)) opener_rank[p] = ++o;
  for (int p = m.points(); p >= 1; --p)
    if (!m.is_opener(p)) closer_rank[p] = ++c;
  std::vector<int> word(n);
  for (const Arc& a : m.arcs()) word[opener_rank[a.opener] - 1] = closer_rank[a.closer];
  return Transversal(std::move(lambda), std::move(word));
}

std::string to_string(const Matching& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.arcs().size(); ++i) {
    if (i) out += ',';
    out += "(" + std::to_string(m.arcs()[i].opener) + "," + std::to_string(m.arcs()[i].closer) + ")";
  }
  return out + "}";
}

}  // namespace peakval

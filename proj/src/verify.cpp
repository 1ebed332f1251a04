#include "peakval/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "peakval/pipeline.hpp"

namespace peakval {

namespace {

struct Failure {
  Json detail;
};

class Probe {
 public:
  void count(std::uint64_t n = 1) { checked_ += n; }
  std::uint64_t checked() const { return checked_; }

  template <class Detail>
  void require(bool ok, const char* property, Detail&& detail) {
    if (ok) return;
    Json out{{"property", property}};
    Json extra = detail();
    if (extra.is_object())
      for (auto& [k, v] : extra.items()) out[k] = v;
    throw Failure{std::move(out)};
  }

  void require(bool ok, const char* property) {
    require(ok, property, [] { return Json::object(); });
  }

 private:
  std::uint64_t checked_ = 0;
};

struct Task {
  Json label;
  std::function<void(Probe&)> body;
};

struct TaskResult {
  std::uint64_t checked = 0;
  Json counterexample;
};

TaskResult run_one(const Task& task) {
  Probe probe;
  TaskResult r;
  try {
    task.body(probe);
  } catch (const Failure& f) {
    r.counterexample = Json{{"task", task.label}};
    for (auto& [k, v] : f.detail.items()) r.counterexample[k] = v;
  } catch (const std::exception& e) {
    r.counterexample = Json{{"task", task.label}, {"error", e.what()}};
  }
  r.checked = probe.checked();
  return r;
}

std::vector<TaskResult> run_all(const std::vector<Task>& tasks, int jobs) {
  std::vector<TaskResult> results(tasks.size());
  if (jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = run_one(tasks[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = run_one(tasks[i]);
  };
  std::vector<std::thread> pool;
  const int n = std::min<int>(jobs, static_cast<int>(tasks.size()));
  for (int j = 0; j < n; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

// Helpers shared by the checks.

std::string type_of(const Transversal& t) { return border_type(t.shape()); }

std::string type_of(const OscillatingTableau& o) {
  std::string out;
  for (int i = 1; i <= o.length(); ++i) out += step_at(o, i).added ? 'u' : 'd';
  return out;
}

std::uint64_t double_factorial_odd(int n) {
  std::uint64_t r = 1;
  for (int i = 1; i < 2 * n; i += 2) r *= static_cast<std::uint64_t>(i);
  return r;
}

SetPolynomial scaled(const SetPolynomial& p, std::uint64_t factor) {
  SetPolynomial out;
  for (const auto& [s, c] : p.terms()) out.add(s, c * factor);
  return out;
}

Json runs_json(const std::vector<Run>& runs) {
  Json out = Json::array();
  for (const Run& r : runs) {
    Json chain = Json::array();
    for (const auto& s : r.chain) chain.push_back(to_json(s));
    out.push_back(Json{{"addition", r.addition}, {"chain", chain}});
  }
  return out;
}

Json oscillating_chain(const OscillatingTableau& o) {
  Json out{{"O", to_json(o)}};
  try {
    out["barred_word"] = barred_word_to_json(barred_word(o));
    out["runs"] = runs_json(decompose(o));
  } catch (const std::exception& e) {
    out["chain_error"] = e.what();
  }
  return out;
}

Json matching_chain(const Matching& m) {
  Json out{{"M", to_json(m)}};
  try {
    Json rest = oscillating_chain(to_oscillating(m));
    for (auto& [k, v] : rest.items()) out[k] = v;
  } catch (const std::exception& e) {
    out["chain_error"] = e.what();
  }
  return out;
}

Json transversal_chain(const Transversal& t) {
  Json out{{"T", to_json(t)}};
  try {
    Json rest = matching_chain(to_matching(t));
    for (auto& [k, v] : rest.items()) out[k] = v;
  } catch (const std::exception& e) {
    out["chain_error"] = e.what();
  }
  return out;
}

Json polys(const SetPolynomial& a, const SetPolynomial& b) {
  return Json{{"left", render(a)}, {"right", render(b)}};
}

std::string pv_string(const PeakValley& pv) {
  return "Peak " + to_string(pv.peak) + ", Val " + to_string(pv.valley);
}

Json pattern_list(const std::vector<Permutation>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

// Skew shapes with 1..max_cells cells whose outer shape fits in a box,
// grouped by outer shape.
std::vector<std::pair<Partition, std::vector<SkewShape>>> skew_shapes(int box, int max_cells) {
  std::vector<std::pair<Partition, std::vector<SkewShape>>> out;
  for (const Partition& outer : partitions_in_box(box, box)) {
    if (outer.empty()) continue;
    std::vector<SkewShape> group;
    for (const Partition& inner : partitions_in_box(outer.length(), outer.row(1))) {
      int cells = outer.size() - inner.size();
      if (cells < 1 || cells > max_cells || !outer.contains(inner)) continue;
      group.emplace_back(outer, inner);
    }
    if (!group.empty()) out.emplace_back(outer, std::move(group));
  }
  return out;
}

using SkewCheck = std::function<void(Probe&, const SkewShape&)>;

std::vector<Task> skew_tasks(const VerifyOptions& o, int n, SkewCheck check) {
  std::vector<Task> tasks;
  for (auto& [outer, group] : skew_shapes(o.box, n))
    tasks.push_back({Json{{"outer", to_json(outer)}}, [group = group, check](Probe& p) {
                       for (const SkewShape& s : group) check(p, s);
                     }});
  return tasks;
}

std::vector<Task> straight_tasks(int n, std::function<void(Probe&, const Partition&)> check) {
  std::vector<Task> tasks;
  for (int size = 1; size <= n; ++size)
    for (const Partition& lambda : partitions_of(size))
      tasks.push_back({Json{{"shape", to_json(lambda)}}, [lambda, check](Probe& p) { check(p, lambda); }});
  return tasks;
}

std::vector<Task> per_size_tasks(int n, std::function<void(Probe&, int)> check, int from = 1) {
  std::vector<Task> tasks;
  for (int size = from; size <= n; ++size)
    tasks.push_back({Json{{"n", size}}, [size, check](Probe& p) { check(p, size); }});
  return tasks;
}

// Every admissible shape with 1..n columns; with `self_conjugate` only those.
std::vector<Partition> transversal_shapes(int n, bool self_conjugate) {
  std::vector<Partition> out;
  for (int size = 1; size <= n; ++size)
    for (const Partition& lambda : admissible_shapes(size)) {
      if (!has_transversal(lambda)) continue;
      if (self_conjugate && !is_self_conjugate(lambda)) continue;
      out.push_back(lambda);
    }
  return out;
}

std::vector<Task> shape_tasks(const std::vector<Partition>& shapes,
                              std::function<void(Probe&, const Partition&)> check) {
  std::vector<Task> tasks;
  for (const Partition& lambda : shapes)
    tasks.push_back({Json{{"shape", to_json(lambda)}}, [lambda, check](Probe& p) { check(p, lambda); }});
  return tasks;
}

// ---- skew tableaux ----

void check_skew_syt(Probe& p, const SkewShape& s) {
  SetPolynomial peak, valley;
  std::uint64_t n = 0;
  for_each_yamanouchi(s, [&](const YamanouchiWord& y) {
    PeakValley pv = peak_valley(StandardTableau::from_row_word(y));
    peak.add(pv.peak);
    valley.add(pv.valley);
    ++n;
  });
  auto shape = [&] { return Json{{"shape", to_json(s)}}; };
  p.require(n == count_syt(s), "tableau count matches the counting formula", [&] {
    Json j = shape();
    j["enumerated"] = n;
    j["formula"] = count_syt(s);
    return j;
  });
  p.require(peak == valley, "Peak and Val equidistributed", [&] {
    Json j = shape();
    j.update(polys(peak, valley));
    return j;
  });
  p.count();
}

void check_yamanouchi_word(Probe& p, const SkewShape& s) {
  for (const StandardTableau& t : enumerate_syt(s)) {
    YamanouchiWord y = to_yamanouchi_word(t);
    auto detail = [&] { return Json{{"T", to_json(t)}, {"word", Json(y.letters())}}; };
    p.require(to_tableau(y) == t, "word round trip", detail);
    PeakValley pt = peak_valley(t), py = peak_valley(y);
    p.require(pt.peak == py.valley && pt.valley == py.peak, "Peak(T) = Val(word), Val(T) = Peak(word)",
              [&] {
                Json j = detail();
                j["tableau"] = pv_string(pt);
                j["word_stats"] = pv_string(py);
                return j;
              });
    p.count();
  }
}

void check_yamanouchi_permutation(Probe& p, const SkewShape& s) {
  for (const StandardTableau& t : enumerate_syt(s)) {
    Permutation pi = to_yamanouchi_permutation(t);
    auto detail = [&] { return Json{{"T", to_json(t)}, {"permutation", to_json(pi)}}; };
    p.require(to_tableau(pi, s) == t, "permutation round trip", detail);
    p.require(permutation_to_word(pi, s) == to_yamanouchi_word(t), "permutation lifts the word", detail);
    PeakValley pt = peak_valley(t), pp = peak_valley(pi);
    p.require(pt.peak == pp.valley && pt.valley == pp.peak,
              "Peak(T) = Val(permutation), Val(T) = Peak(permutation)", [&] {
                Json j = detail();
                j["tableau"] = pv_string(pt);
                j["permutation_stats"] = pv_string(pp);
                return j;
              });
    p.count();
  }
}

void check_commutativity(Probe& p, const SkewShape& s) {
  for (const StandardTableau& t : enumerate_syt(s)) {
    PeakValley pv = peak_valley(t);
    Permutation pi = to_yamanouchi_permutation(t);
    for (int i = 2; i < t.size(); ++i) {
      bool in = pv.peak.contains(i) || pv.valley.contains(i);
      auto detail = [&] { return Json{{"T", to_json(t)}, {"i", i}, {"permutation", to_json(pi)}}; };
      p.require(is_knuth_move_defined(t, i) == in, "move defined exactly at peaks and valleys", detail);
      if (!in) continue;
      StandardTableau moved = knuth_move(t, i);
      p.require(knuth_move(moved, i) == t, "move is an involution", detail);
      p.require(is_knuth_move_defined(pi, i), "move defined on the permutation", detail);
      Permutation lhs = to_yamanouchi_permutation(moved), rhs = knuth_move(pi, i);
      p.require(lhs == rhs, "lift commutes with the move", [&] {
        Json j = detail();
        j["lift_of_move"] = to_json(lhs);
        j["move_of_lift"] = to_json(rhs);
        return j;
      });
      p.count();
    }
  }
}

void check_equal(Probe& p, const SkewShape& s) {
  std::set<StandardTableau> seen;
  for (const StandardTableau& t : enumerate_syt(s)) {
    if (seen.count(t)) continue;
    std::vector<StandardTableau> cls = knuth_class(t);
    seen.insert(cls.begin(), cls.end());
    std::vector<Permutation> lifted;
    for (const auto& x : cls) lifted.push_back(to_yamanouchi_permutation(x));
    std::sort(lifted.begin(), lifted.end());
    std::vector<Permutation> target = knuth_class(to_yamanouchi_permutation(t));
    p.require(lifted == target, "lift maps the tableau class onto the permutation class", [&] {
      return Json{{"T", to_json(t)}, {"lifted", pattern_list(lifted)}, {"class", pattern_list(target)}};
    });
    p.count();
  }
}

void check_word_pairing(Probe& p, const SkewShape& s) {
  SetPolynomial peak, valley;
  std::set<YamanouchiWord> images;
  std::uint64_t n = 0;
  for_each_yamanouchi(s, [&](const YamanouchiWord& y) {
    PeakValley pv = peak_valley(y);
    peak.add(pv.peak);
    valley.add(pv.valley);
    YamanouchiWord z = pair_valley_to_peak(y);
    auto detail = [&] { return Json{{"word", to_json(y)}, {"image", to_json(z)}}; };
    p.require(z.shape() == s, "image has the same shape", detail);
    p.require(peak_valley(z).peak == pv.valley, "Val(y) = Peak(image)", detail);
    p.require(pair_peak_to_valley(z) == y, "inverse round trip", detail);
    images.insert(z);
    ++n;
  });
  p.require(images.size() == n, "pairing is injective", [&] { return Json{{"shape", to_json(s)}}; });
  p.require(peak == valley, "Peak and Val equidistributed over words", [&] {
    Json j{{"shape", to_json(s)}};
    j.update(polys(peak, valley));
    return j;
  });
  p.count(n);
}

// ---- straight shapes ----

void check_splice(Probe& p, const Partition& lambda) {
  auto syt = enumerate_syt(SkewShape(lambda));
  SetPolynomial peak = distribution(syt, Statistic::peak), valley = distribution(syt, Statistic::valley);
  const int n = lambda.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    IndexSet a = IndexSet::from_bits(bits << 1);
    bool gap = false;
    for (int k = 1; k < n && !gap; ++k) gap = !a.contains(k) && !a.contains(k + 1);
    if (!gap) continue;
    SetPolynomial rp = restrict(peak, a), rv = restrict(valley, a);
    p.require(rp == rv, "restrictions agree", [&] {
      Json j{{"shape", to_json(lambda)}, {"A", to_json(a)}};
      j.update(polys(rp, rv));
      return j;
    });
    p.count();
  }
}

void check_empty(Probe& p, const Partition& lambda) {
  std::uint64_t no_peak = 0, no_valley = 0;
  for (const StandardTableau& t : enumerate_syt(SkewShape(lambda))) {
    PeakValley pv = peak_valley(t);
    no_peak += pv.peak.empty();
    no_valley += pv.valley.empty();
  }
  const std::uint64_t expected = rank(lambda) >= 2 ? 0 : 1;
  p.require(no_peak == expected && no_valley == expected, "tableaux with empty Peak or Val", [&] {
    return Json{{"shape", to_json(lambda)},
                {"rank", rank(lambda)},
                {"empty_peak", no_peak},
                {"empty_valley", no_valley},
                {"expected", expected}};
  });
  p.count();
}

// ---- permutations ----

std::map<StandardTableau, std::vector<Permutation>> insertion_groups(int n) {
  std::map<StandardTableau, std::vector<Permutation>> groups;
  for_each_permutation(n, [&](const Permutation& pi) { groups[rsk(pi).insertion].push_back(pi); });
  return groups;
}

void check_knuth_equi(Probe& p, int n) {
  for (const auto& [insertion, members] : insertion_groups(n)) {
    std::vector<Permutation> cls = knuth_class(members.front());
    p.require(cls == members, "class equals the permutations with one insertion tableau", [&] {
      return Json{{"P", to_json(insertion)}, {"class", pattern_list(cls)}, {"same_insertion", pattern_list(members)}};
    });
    p.count(members.size());
  }
}

void check_knuth_peak_valley(Probe& p, int n) {
  for (const auto& [insertion, members] : insertion_groups(n)) {
    std::vector<Permutation> cls = knuth_class(members.front());
    SetPolynomial peak = distribution(cls, Statistic::peak), valley = distribution(cls, Statistic::valley);
    p.require(peak == valley, "Peak and Val equidistributed over the class", [&] {
      Json j{{"representative", to_json(members.front())}};
      j.update(polys(peak, valley));
      return j;
    });
    p.count();
  }
}

void check_perm_syt(Probe& p, int n) {
  std::map<Partition, std::pair<SetPolynomial, SetPolynomial>> by_shape;
  for (const auto& [insertion, members] : insertion_groups(n)) {
    const Partition& lambda = insertion.shape().outer();
    if (!by_shape.count(lambda)) {
      auto syt = enumerate_syt(SkewShape(lambda));
      by_shape[lambda] = {distribution(syt, Statistic::peak), distribution(syt, Statistic::valley)};
    }
    const auto& [sp, sv] = by_shape[lambda];
    SetPolynomial cp = distribution(members, Statistic::peak), cv = distribution(members, Statistic::valley);
    p.require(cp == sp && cv == sv, "class statistics match tableaux of its shape", [&] {
      Json j{{"representative", to_json(members.front())}, {"shape", to_json(lambda)}};
      j["class_peak"] = render(cp);
      j["tableau_peak"] = render(sp);
      j["class_valley"] = render(cv);
      j["tableau_valley"] = render(sv);
      return j;
    });
    p.count();
  }
}

void check_shape_peak_valley(Probe& p, int n) {
  std::map<Partition, std::vector<std::vector<Permutation>>> classes;
  for (auto& [insertion, members] : insertion_groups(n))
    classes[insertion.shape().outer()].push_back(std::move(members));
  for (const auto& [lambda, list] : classes) {
    SetPolynomial peak, valley;
    for (const auto& cls : list) {
      peak.add(distribution(cls, Statistic::peak));
      valley.add(distribution(cls, Statistic::valley));
    }
    const std::uint64_t f = hook_length_count(lambda);
    auto detail = [&, lam = lambda] { return Json{{"shape", to_json(lam)}}; };
    p.require(list.size() == f, "number of classes equals the tableau count", detail);
    p.require(peak == valley, "Peak and Val equidistributed over the shape", [&] {
      Json j = detail();
      j.update(polys(peak, valley));
      return j;
    });
    for (const auto& cls : list) {
      SetPolynomial one = scaled(distribution(cls, Statistic::peak), f);
      p.require(one == peak, "shape distribution is the class distribution times the tableau count", [&] {
        Json j = detail();
        j["representative"] = to_json(cls.front());
        j.update(polys(one, peak));
        return j;
      });
    }
    p.count();
  }
}

void check_involution_peak_valley(Probe& p, int n) {
  std::map<Partition, std::pair<SetPolynomial, SetPolynomial>> by_shape;
  for_each_involution(n, [&](const Permutation& pi) {
    auto& [peak, valley] = by_shape[rsk(pi).insertion.shape().outer()];
    PeakValley pv = peak_valley(pi);
    peak.add(pv.peak);
    valley.add(pv.valley);
  });
  for (const auto& [lambda, pair] : by_shape) {
    p.require(pair.first == pair.second, "Peak and Val equidistributed over involutions of the shape", [&] {
      Json j{{"shape", to_json(lambda)}};
      j.update(polys(pair.first, pair.second));
      return j;
    });
    p.count();
  }
}

// ---- transversals, matchings, oscillating tableaux ----

void check_chi_shape(Probe& p, const Partition& lambda) {
  std::set<Matching> images;
  std::uint64_t n = 0;
  for_each_transversal(lambda, false, [&](const Transversal& t) {
    Matching m = to_matching(t);
    auto detail = [&] { return transversal_chain(t); };
    p.require(to_transversal(m) == t, "inverse round trip", detail);
    p.require(type_of(t) == m.type(), "type(T) = type(M)", detail);
    PeakValley tilde = tilde_peak_valley(t), pm = peak_valley(m);
    p.require(tilde.peak == pm.valley, "tilde Peak(T) = Val(M)", detail);
    p.require(tilde.valley == pm.peak, "tilde Val(T) = Peak(M)", detail);
    p.require(t.is_symmetric() == m.is_bilaterally_symmetric(), "symmetric iff bilaterally symmetric", detail);
    for (int k = 2; k <= 4; ++k) {
      p.require(avoids(t, {Permutation::decreasing(k)}) == is_noncrossing(m, k),
                "avoids k..1 iff k-noncrossing", detail);
      p.require(avoids(t, {Permutation::identity(k)}) == is_nonnesting(m, k),
                "avoids 1..k iff k-nonnesting", detail);
    }
    images.insert(m);
    ++n;
  });
  p.require(images.size() == n, "injective on the shape", [&] { return Json{{"shape", to_json(lambda)}}; });
  p.count(n);
}

void check_chi_matchings(Probe& p, int n) {
  std::uint64_t total = 0;
  for_each_matching(n, [&](const Matching& m) {
    Transversal t = to_transversal(m);
    p.require(to_matching(t) == m, "round trip from matchings", [&] { return matching_chain(m); });
    ++total;
  });
  p.require(total == double_factorial_odd(n), "matching count is (2n-1)!!",
            [&] { return Json{{"n", n}, {"count", total}}; });
  p.count(total);
}

void check_phi_matchings(Probe& p, int n) {
  std::uint64_t total = 0;
  for_each_matching(n, [&](const Matching& m) {
    OscillatingTableau o = to_oscillating(m);
    auto detail = [&] { return matching_chain(m); };
    p.require(to_oscillating_ascending(m) == o, "both sweeps agree", detail);
    p.require(to_matching(o) == m, "inverse round trip", detail);
    p.require(m.type() == type_of(o), "type(M) = type(O)", detail);
    PeakValley pm = peak_valley(m), po = peak_valley(o);
    p.require(pm.peak == po.peak, "Peak(M) = Peak(O)", detail);
    p.require(pm.valley == po.valley, "Val(M) = Val(O)", detail);
    p.require(m.is_bilaterally_symmetric() == is_symmetric(o), "bilaterally symmetric iff symmetric", detail);
    for (int k = 2; k <= 4; ++k) {
      p.require(is_noncrossing(m, k) == (max_rows(o) <= k - 1), "k-noncrossing iff at most k-1 rows", detail);
      p.require(is_nonnesting(m, k) == (max_columns(o) <= k - 1), "k-nonnesting iff at most k-1 columns",
                detail);
    }
    ++total;
  });
  p.count(total);
}

void check_phi_oscillating(Probe& p, int n) {
  std::uint64_t total = 0;
  for_each_oscillating(n, [&](const OscillatingTableau& o) {
    p.require(to_oscillating(to_matching(o)) == o, "round trip from oscillating tableaux",
              [&] { return oscillating_chain(o); });
    ++total;
  });
  p.require(total == double_factorial_odd(n), "oscillating tableau count is (2n-1)!!",
            [&] { return Json{{"n", n}, {"count", total}}; });
  p.count(total);
}

void check_xinzhang(Probe& p, int n) {
  for_each_matching(n, [&](const Matching& m) {
    p.require(to_oscillating(m.reversed()) == to_oscillating(m).reversed(), "reversal commutes with the sweep",
              [&] { return matching_chain(m); });
    p.count();
  });
}

using ConjugateFn = std::function<OscillatingTableau(const OscillatingTableau&)>;

void check_conjugate(Probe& p, int n, const ConjugateFn& conj) {
  for_each_oscillating(n, [&](const OscillatingTableau& o) {
    OscillatingTableau c = conj(o);
    auto detail = [&] {
      Json j = oscillating_chain(o);
      j["image"] = to_json(c);
      return j;
    };
    p.require(conj(c) == o, "involution", detail);
    p.require(type_of(o) == type_of(c), "type preserved", detail);
    PeakValley po = peak_valley(o), pc = peak_valley(c);
    p.require(po.valley == pc.peak, "Val(O) = Peak(image)", detail);
    p.require(po.peak == pc.valley, "Peak(O) = Val(image)", detail);
    p.require(is_symmetric(o) == is_symmetric(c), "symmetry preserved", detail);
    for (int k = 2; k <= n + 1; ++k) {
      p.require((max_rows(o) <= k - 1) == (max_columns(c) <= k - 1), "row bound becomes column bound", detail);
      p.require((max_columns(o) <= k - 1) == (max_rows(c) <= k - 1), "column bound becomes row bound", detail);
    }
    p.count();
  });
}

void check_psi(Probe& p, int n) {
  std::set<OscillatingTableau> images;
  std::uint64_t total = 0;
  for_each_oscillating(n, [&](const OscillatingTableau& o) {
    OscillatingTableau x = exchange_runs(o);
    auto detail = [&] {
      Json j = oscillating_chain(o);
      j["image"] = to_json(x);
      return j;
    };
    p.require(x.closed() && x.length() == o.length(), "image is an oscillating tableau of the same length", detail);
    p.require(exchange_runs_inverse(x) == o, "inverse round trip", detail);
    p.require(type_of(o) == type_of(x), "type preserved", detail);
    p.require(peak_valley(o).valley == peak_valley(x).peak, "Val(O) = Peak(image)", detail);
    p.require(is_symmetric(o) == is_symmetric(x), "symmetry preserved", detail);
    for (int k = 2; k <= n + 1; ++k) {
      p.require((max_rows(o) <= k - 1) == (max_rows(x) <= k - 1), "row bound preserved", detail);
      p.require((max_columns(o) <= k - 1) == (max_columns(x) <= k - 1), "column bound preserved", detail);
    }
    images.insert(x);
    ++total;
  });
  p.require(images.size() == total, "injective", [&] { return Json{{"n", n}}; });
  p.count(total);
}

Run reversed_run(const Run& r) {
  return Run{!r.addition, std::vector<Partition>(r.chain.rbegin(), r.chain.rend())};
}

void check_observation(Probe& p, int n) {
  for_each_oscillating(n, [&](const OscillatingTableau& o) {
    auto runs = decompose(o);
    auto detail = [&] { return oscillating_chain(o); };
    p.require(recompose(runs) == o, "decomposition round trip", detail);
    const std::size_t pairs = runs.size() / 2;
    bool criterion = runs.size() % 2 == 0;
    for (std::size_t i = 0; criterion && i < pairs; ++i)
      criterion = runs[2 * i] == reversed_run(runs[2 * (pairs - 1 - i) + 1]);
    p.require(criterion == is_symmetric(o), "symmetric iff each addition run mirrors its deletion run", detail);
    p.count();
  });
}

Transversal conjugate_with(const Transversal& t, const ConjugateFn& conj) {
  return to_transversal(to_matching(conj(to_oscillating(to_matching(t)))));
}

void check_big_phi(Probe& p, const Partition& lambda, const ConjugateFn& conj) {
  for_each_transversal(lambda, false, [&](const Transversal& t) {
    Transversal s = conjugate_with(t, conj);
    auto detail = [&] {
      Json j = transversal_chain(t);
      j["image"] = to_json(s);
      return j;
    };
    p.require(conjugate_with(s, conj) == t, "involution", detail);
    p.require(type_of(t) == type_of(s), "type preserved", detail);
    PeakValley pt = peak_valley(t), ps = peak_valley(s);
    p.require(pt.peak == ps.valley, "Peak(T) = Val(image)", detail);
    p.require(pt.valley == ps.peak, "Val(T) = Peak(image)", detail);
    p.require(t.is_symmetric() == s.is_symmetric(), "symmetry preserved", detail);
    for (int k = 2; k <= lambda.length() + 1; ++k) {
      p.require(avoids(t, {Permutation::decreasing(k)}) == avoids(s, {Permutation::identity(k)}),
                "avoids k..1 iff image avoids 1..k", detail);
      p.require(avoids(t, {Permutation::identity(k)}) == avoids(s, {Permutation::decreasing(k)}),
                "avoids 1..k iff image avoids k..1", detail);
    }
    p.count();
  });
}

void check_big_psi(Probe& p, const Partition& lambda) {
  std::set<Transversal> images;
  std::uint64_t total = 0;
  for_each_transversal(lambda, false, [&](const Transversal& t) {
    Transversal s = exchange_transversal(t);
    auto detail = [&] {
      Json j = transversal_chain(t);
      j["image"] = to_json(s);
      return j;
    };
    p.require(type_of(t) == type_of(s), "type preserved", detail);
    p.require(exchange_transversal_inverse(s) == t, "inverse round trip", detail);
    p.require(peak_valley(t).peak == peak_valley(s).valley, "Peak(T) = Val(image)", detail);
    p.require(t.is_symmetric() == s.is_symmetric(), "symmetry preserved", detail);
    for (int k = 2; k <= lambda.length() + 1; ++k) {
      p.require(avoids(t, {Permutation::decreasing(k)}) == avoids(s, {Permutation::decreasing(k)}),
                "avoidance of k..1 preserved", detail);
      p.require(avoids(t, {Permutation::identity(k)}) == avoids(s, {Permutation::identity(k)}),
                "avoidance of 1..k preserved", detail);
    }
    images.insert(s);
    ++total;
  });
  p.require(images.size() == total, "injective on the shape", [&] { return Json{{"shape", to_json(lambda)}}; });
  p.count(total);
}

// ---- joint and pattern class distributions ----

JointSetPolynomial joint_over(const Partition& lambda, bool symmetric, const std::vector<Permutation>& avoid) {
  JointSetPolynomial out;
  for_each_transversal(lambda, symmetric, [&](const Transversal& t) {
    if (!avoids(t, avoid)) return;
    PeakValley pv = peak_valley(t);
    out.add(pv.peak, pv.valley);
  });
  return out;
}

void check_joint_symmetric(Probe& p, const Partition& lambda, bool symmetric) {
  JointSetPolynomial j = joint_over(lambda, symmetric, {});
  p.require(j == j.swapped(), "joint distribution symmetric in Peak and Val",
            [&] { return Json{{"shape", to_json(lambda)}, {"joint", render(j)}}; });
  p.count();
}

void check_joint_exchange(Probe& p, const Partition& lambda, bool symmetric, const std::vector<int>& ks) {
  for (int k : ks) {
    JointSetPolynomial dec = joint_over(lambda, symmetric, {Permutation::decreasing(k)});
    JointSetPolynomial inc = joint_over(lambda, symmetric, {Permutation::identity(k)});
    p.require(dec == inc.swapped(), "joint over k..1 avoiders equals swapped joint over 1..k avoiders", [&] {
      return Json{{"shape", to_json(lambda)}, {"k", k}, {"left", render(dec)}, {"right", render(inc.swapped())}};
    });
    p.count();
  }
}

void check_four_way(Probe& p, const Partition& lambda, bool symmetric, const std::vector<int>& ks) {
  for (int k : ks) {
    ClassCount ip = transversal_count(lambda, symmetric, {Permutation::identity(k)}, Statistic::peak);
    ClassCount iv = transversal_count(lambda, symmetric, {Permutation::identity(k)}, Statistic::valley);
    ClassCount jv = transversal_count(lambda, symmetric, {Permutation::decreasing(k)}, Statistic::valley);
    ClassCount jp = transversal_count(lambda, symmetric, {Permutation::decreasing(k)}, Statistic::peak);
    p.require(ip.distribution == iv.distribution && iv.distribution == jv.distribution &&
                  jv.distribution == jp.distribution,
              "four distributions agree", [&] {
                return Json{{"shape", to_json(lambda)},
                            {"k", k},
                            {"inc_peak", render(ip.distribution)},
                            {"inc_valley", render(iv.distribution)},
                            {"dec_valley", render(jv.distribution)},
                            {"dec_peak", render(jp.distribution)}};
              });
    p.count();
  }
}

void check_general(Probe& p, const Partition& lambda, bool symmetric, int k, const Permutation& tau) {
  const Permutation inc = direct_sum(Permutation::identity(k), tau);
  const Permutation dec = direct_sum(Permutation::decreasing(k), tau);
  SetPolynomial from_dist, to_dist;
  std::uint64_t from_count = 0, to_count = 0;
  std::set<Transversal> images;
  const auto patterns = transfer_patterns(tau, symmetric);
  for_each_transversal(lambda, symmetric, [&](const Transversal& t) {
    if (avoids(t, {dec})) {
      ++to_count;
      to_dist.add(peak_valley(t).peak);
    }
    if (!avoids(t, {inc})) return;
    ++from_count;
    IndexSet peak = peak_valley(t).peak;
    from_dist.add(peak);
    PatternTransfer fwd = pattern_transfer(t, k, tau, symmetric);
    const Transversal& s = fwd.image;
    auto detail = [&] {
      Json j = transversal_chain(t);
      j["k"] = k;
      j["tau"] = to_json(tau);
      j["coloring"] = to_json(fwd.coloring);
      j["reduced_image"] = to_json(fwd.reduced_image);
      j["image"] = to_json(s);
      return j;
    };
    p.require(s.shape() == lambda, "image has the same shape", detail);
    p.require(avoids(s, {dec}), "image avoids (k..1)+tau", detail);
    p.require(!symmetric || s.is_symmetric(), "image is symmetric", detail);
    p.require(peak_valley(s).peak == peak, "Peak preserved", detail);
    BoardColoring again = color_board(s, patterns);
    p.require(again.kept_columns == fwd.coloring.kept_columns && again.kept_rows == fwd.coloring.kept_rows &&
                  again.reduced_shape == fwd.coloring.reduced_shape,
              "image has the same coloring", detail);
    p.require(pattern_transfer_inverse(s, k, tau, symmetric).image == t, "inverse round trip", detail);
    images.insert(s);
    p.count();
  });
  auto label = [&] { return Json{{"shape", to_json(lambda)}, {"k", k}, {"tau", to_json(tau)}}; };
  p.require(images.size() == from_count, "injective", label);
  p.require(from_count == to_count, "class sizes agree", [&] {
    Json j = label();
    j["inc_count"] = from_count;
    j["dec_count"] = to_count;
    return j;
  });
  p.require(from_dist == to_dist, "Peak equidistributed", [&] {
    Json j = label();
    j.update(polys(from_dist, to_dist));
    return j;
  });
}

std::vector<Partition> general_shapes(int squares, int max_cells, bool self_conjugate) {
  std::vector<Partition> out;
  std::set<Partition> seen;
  for (int n = 1; n <= squares; ++n) {
    Partition sq(std::vector<int>(n, n));
    if (seen.insert(sq).second) out.push_back(sq);
  }
  for (int n = 1; n * (n + 1) / 2 <= max_cells; ++n)
    for (const Partition& lambda : admissible_shapes(n)) {
      if (lambda.size() > max_cells || !has_transversal(lambda)) continue;
      if (self_conjugate && !is_self_conjugate(lambda)) continue;
      if (seen.insert(lambda).second) out.push_back(lambda);
    }
  return out;
}

std::vector<Task> general_tasks(const VerifyOptions& o, int n, bool symmetric) {
  std::vector<Task> tasks;
  for (const Partition& lambda : general_shapes(n, o.max_cells, symmetric))
    for (int k : o.ks)
      for (const Permutation& tau : o.taus)
        tasks.push_back({Json{{"shape", to_json(lambda)}, {"k", k}, {"tau", to_json(tau)}},
                         [lambda, k, tau, symmetric](Probe& p) { check_general(p, lambda, symmetric, k, tau); }});
  return tasks;
}

std::vector<Task> class_tasks(const VerifyOptions& o, int n, int from,
                              std::function<void(Probe&, int, int, const Permutation&)> check) {
  std::vector<Task> tasks;
  for (int size = from; size <= n; ++size)
    for (int k : o.ks)
      for (const Permutation& tau : o.taus)
        tasks.push_back({Json{{"n", size}, {"k", k}, {"tau", to_json(tau)}},
                         [size, k, tau, check](Probe& p) { check(p, size, k, tau); }});
  return tasks;
}

void check_involutions(Probe& p, int n, int k, const Permutation& tau) {
  const Permutation inc = direct_sum(Permutation::identity(k), tau);
  const Permutation dec = direct_sum(Permutation::decreasing(k), tau);
  ClassCount a = class_count(PermutationClass::involutions, n, {inc});
  ClassCount b = class_count(PermutationClass::involutions, n, {dec});
  p.require(a == b, "Peak equidistributed over involutions", [&] {
    return Json{{"inc_count", a.count}, {"dec_count", b.count}, {"left", render(a.distribution)},
                {"right", render(b.distribution)}};
  });
  p.count();
}

void check_alternating_involutions(Probe& p, int n, int k, const Permutation& tau) {
  const Permutation inc = direct_sum(Permutation::identity(k), tau);
  const Permutation dec = direct_sum(Permutation::decreasing(k), tau);
  ClassCount a = class_count(PermutationClass::alternating_involutions, n, {inc});
  ClassCount b = class_count(PermutationClass::alternating_involutions, n, {dec});
  p.require(a.count == b.count, "alternating involution counts agree",
            [&] { return Json{{"inc_count", a.count}, {"dec_count", b.count}}; });
  p.count();
}

void check_alternating_transfer(Probe& p, int n, int k, const Permutation& tau) {
  const Permutation inc = direct_sum(Permutation::identity(k), tau);
  const Permutation dec = direct_sum(Permutation::decreasing(k), tau);
  const Partition square(std::vector<int>(n, n));
  for (bool symmetric : {false, true}) {
    PermutationClass cls = symmetric ? PermutationClass::alternating_involutions : PermutationClass::alternating;
    ClassCount a = class_count(cls, n, {inc});
    ClassCount b = class_count(cls, n, {dec});
    p.require(a.count == b.count, "alternating class sizes agree", [&] {
      return Json{{"symmetric", symmetric}, {"inc_count", a.count}, {"dec_count", b.count}};
    });
    for_each_in_class(cls, n, [&](const Permutation& pi) {
      if (!avoids(pi, {inc})) return;
      Transversal t(square, pi.word());
      Transversal s = pattern_transfer(t, k, tau, symmetric).image;
      p.require(s.as_permutation().is_alternating(), "image is alternating", [&] {
        Json j = transversal_chain(t);
        j["symmetric"] = symmetric;
        j["image"] = to_json(s);
        return j;
      });
      p.count();
    });
  }
}

// ---- catalog ----

enum Uses : unsigned { uses_box = 1, uses_k = 2, uses_tau = 4, uses_cells = 8 };

struct Entry {
  TheoremInfo info;
  unsigned uses;
  std::function<std::vector<Task>(const VerifyOptions&, int)> build;
};

std::vector<Task> transversal_size_tasks(int n, std::function<void(Probe&, const Partition&)> check) {
  return shape_tasks(transversal_shapes(n, false), std::move(check));
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    auto skew = [](SkewCheck c) {
      return [c](const VerifyOptions& o, int n) { return skew_tasks(o, n, c); };
    };
    t.push_back({{"thm:skewSYT", "Peak and Val equidistributed over tableaux of each skew shape", 8, 10},
                 uses_box, skew(check_skew_syt)});
    t.push_back({{"lem:Yamanouchi-word", "Peak(T) = Val of the Yamanouchi word and conversely", 7, 10},
                 uses_box, skew(check_yamanouchi_word)});
    t.push_back({{"lem:Yamanouchi-permutation", "Peak(T) = Val of the Yamanouchi permutation and conversely", 7, 10},
                 uses_box, skew(check_yamanouchi_permutation)});
    t.push_back({{"lem:commutativity", "the Yamanouchi permutation commutes with Knuth moves", 7, 9}, uses_box,
                 skew(check_commutativity)});
    t.push_back({{"lem:equal", "Knuth classes of tableaux lift onto Knuth classes of permutations", 7, 9},
                 uses_box, skew(check_equal)});
    t.push_back({{"lem:Knuth-equivalence", "tableaux are Knuth equivalent iff their lifts are", 7, 9}, uses_box,
                 skew(check_equal)});
    t.push_back({{"thm:y", "Peak and Val equidistributed over Yamanouchi words; canonical pairing", 8, 10},
                 uses_box, skew(check_word_pairing)});
    t.push_back({{"lem:splice", "restrictions avoiding two consecutive indices agree", 8, 9}, 0,
                 [](const VerifyOptions&, int n) { return straight_tasks(n, check_splice); }});
    t.push_back({{"lem:empty", "rank decides whether empty Peak or Val occurs", 9, 11}, 0,
                 [](const VerifyOptions&, int n) { return straight_tasks(n, check_empty); }});
    t.push_back({{"thm:Knuth-equi", "Knuth classes are the fibres of the insertion tableau", 6, 8}, 0,
                 [](const VerifyOptions&, int n) { return per_size_tasks(n, check_knuth_equi); }});
    t.push_back({{"thm:Knuth-peak-valley", "Peak and Val equidistributed over each Knuth class", 6, 8}, 0,
                 [](const VerifyOptions&, int n) { return per_size_tasks(n, check_knuth_peak_valley); }});
    t.push_back({{"lem:perm-SYT", "a Knuth class carries the statistics of the tableaux of its shape", 6, 8}, 0,
                 [](const VerifyOptions&, int n) { return per_size_tasks(n, check_perm_syt); }});
    t.push_back({{"thm:Shape-peak-valley", "Peak and Val over permutations of one shape", 6, 8}, 0,
                 [](const VerifyOptions&, int n) { return per_size_tasks(n, check_shape_peak_valley); }});
    t.push_back({{"thm:Involution-peak-valley", "Peak and Val over involutions of one shape", 7, 9}, 0,
                 [](const VerifyOptions&, int n) { return per_size_tasks(n, check_involution_peak_valley); }});
    t.push_back({{"thm:chi", "transversal to matching bijection and its properties", 5, 7}, 0,
                 [](const VerifyOptions&, int n) {
                   auto tasks = transversal_size_tasks(n, check_chi_shape);
                   auto more = per_size_tasks(n, check_chi_matchings);
                   tasks.insert(tasks.end(), more.begin(), more.end());
                   return tasks;
                 }});
    auto phi = [](const VerifyOptions&, int n) {
      auto tasks = per_size_tasks(n, check_phi_matchings);
      auto more = per_size_tasks(n, check_phi_oscillating);
      tasks.insert(tasks.end(), more.begin(), more.end());
      return tasks;
    };
    t.push_back({{"thm:phi", "matching to oscillating tableau bijection and its properties", 5, 7}, 0, phi});
    t.push_back({{"lem:chenth6", "crossings and nestings bound rows and columns", 5, 7}, 0, phi});
    t.push_back({{"lem:xinzhang", "reversal commutes with the matching sweep", 5, 7}, 0,
                 [](const VerifyOptions&, int n) { return per_size_tasks(n, check_xinzhang); }});
    t.push_back({{"lem:conjugate", "shape conjugation on oscillating tableaux", 5, 7}, 0,
                 [](const VerifyOptions& o, int n) {
                   auto conj = o.conjugate;
                   return per_size_tasks(n, [conj](Probe& p, int m) { check_conjugate(p, m, conj); });
                 }});
    t.push_back({{"lem:psi", "run word exchange on oscillating tableaux", 5, 7}, 0,
                 [](const VerifyOptions&, int n) { return per_size_tasks(n, check_psi); }});
    t.push_back({{"obs1", "symmetry criterion of the addition-deletion decomposition", 5, 7}, 0,
                 [](const VerifyOptions&, int n) { return per_size_tasks(n, check_observation); }});
    t.push_back({{"lem:Phi", "Peak/Val exchanging involution on transversals", 5, 7}, 0,
                 [](const VerifyOptions& o, int n) {
                   auto conj = o.conjugate;
                   return transversal_size_tasks(
                       n, [conj](Probe& p, const Partition& l) { check_big_phi(p, l, conj); });
                 }});
    t.push_back({{"thm:Psi", "Peak to Val bijection on transversals keeping avoidance classes", 5, 7}, 0,
                 [](const VerifyOptions&, int n) { return transversal_size_tasks(n, check_big_psi); }});
    t.push_back({{"coro:T", "symmetric joint distribution over transversals of a shape", 6, 7}, 0,
                 [](const VerifyOptions&, int n) {
                   return shape_tasks(transversal_shapes(n, false),
                                      [](Probe& p, const Partition& l) { check_joint_symmetric(p, l, false); });
                 }});
    t.push_back({{"coro:ST", "symmetric joint distribution over symmetric transversals", 6, 8}, 0,
                 [](const VerifyOptions&, int n) {
                   return shape_tasks(transversal_shapes(n, true),
                                      [](Probe& p, const Partition& l) { check_joint_symmetric(p, l, true); });
                 }});
    t.push_back({{"coro:TJk", "joint distribution over k..1 avoiders is the swap over 1..k avoiders", 6, 7},
                 uses_k, [](const VerifyOptions& o, int n) {
                   auto ks = o.ks;
                   return shape_tasks(transversal_shapes(n, false),
                                      [ks](Probe& p, const Partition& l) { check_joint_exchange(p, l, false, ks); });
                 }});
    t.push_back({{"coro:STJk", "symmetric version of the joint exchange", 6, 8}, uses_k,
                 [](const VerifyOptions& o, int n) {
                   auto ks = o.ks;
                   return shape_tasks(transversal_shapes(n, true),
                                      [ks](Probe& p, const Partition& l) { check_joint_exchange(p, l, true, ks); });
                 }});
    t.push_back({{"thm:transversal", "four-way Peak/Val equality over 1..k and k..1 avoiders", 6, 7}, uses_k,
                 [](const VerifyOptions& o, int n) {
                   auto ks = o.ks;
                   return shape_tasks(transversal_shapes(n, false),
                                      [ks](Probe& p, const Partition& l) { check_four_way(p, l, false, ks); });
                 }});
    t.push_back({{"thm:symm-transversal", "four-way equality over symmetric transversals", 6, 8}, uses_k,
                 [](const VerifyOptions& o, int n) {
                   auto ks = o.ks;
                   return shape_tasks(transversal_shapes(n, true),
                                      [ks](Probe& p, const Partition& l) { check_four_way(p, l, true, ks); });
                 }});
    auto general = [](bool sym) {
      return [sym](const VerifyOptions& o, int n) { return general_tasks(o, n, sym); };
    };
    const unsigned g = uses_k | uses_tau | uses_cells;
    t.push_back({{"thm:transversal-general", "Peak over (1..k)+tau and (k..1)+tau avoiders; coloring bijection", 7, 8},
                 g, general(false)});
    t.push_back({{"thm:general1", "coloring bijection between pattern classes", 7, 8}, g, general(false)});
    t.push_back({{"thm:symm-transversal-general", "symmetric version of the pattern class theorem", 7, 8}, g,
                 general(true)});
    t.push_back({{"thm:general2", "symmetric coloring bijection between pattern classes", 7, 8}, g, general(true)});
    t.push_back({{"coro:involutions", "Peak over involutions avoiding (1..k)+tau and (k..1)+tau", 8, 9},
                 uses_k | uses_tau,
                 [](const VerifyOptions& o, int n) { return class_tasks(o, n, 1, check_involutions); }});
    t.push_back({{"thm:AI", "alternating involutions avoiding (1..k)+tau and (k..1)+tau", 10, 12},
                 uses_k | uses_tau,
                 [](const VerifyOptions& o, int n) {
                   for (const auto& tau : o.taus)
                     if (tau.empty()) throw std::invalid_argument("thm:AI needs a nonempty tau");
                   return class_tasks(o, n, 1, check_alternating_involutions);
                 }});
    t.push_back({{"lem:AI", "the coloring bijection keeps alternating permutations alternating", 8, 9},
                 uses_k | uses_tau,
                 [](const VerifyOptions& o, int n) {
                   for (const auto& tau : o.taus)
                     if (tau.empty()) throw std::invalid_argument("lem:AI needs a nonempty tau");
                   return class_tasks(o, n, 1, check_alternating_transfer);
                 }});
    return t;
  }();
  return table;
}

constexpr int max_box = 8;
constexpr int max_cells_ceiling = 24;
constexpr int max_jobs = 256;

}  // namespace

Json to_json(const VerifyReport& r) {
  return Json{{"theorem", r.theorem},
              {"bounds", r.bounds},
              {"checked", r.checked},
              {"status", r.passed ? "pass" : "fail"},
              {"counterexample", r.counterexample}};
}

const std::vector<TheoremInfo>& theorem_catalog() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

VerifyReport verify(const VerifyOptions& options) {
  const auto& table = entries();
  auto it = std::find_if(table.begin(), table.end(), [&](const Entry& e) { return e.info.id == options.theorem; });
  if (it == table.end()) throw std::invalid_argument("unknown theorem id: " + options.theorem);
  const Entry& e = *it;
  const int n = options.max_size == 0 ? e.info.default_size : options.max_size;
  if (n < 1 || n > e.info.max_size)
    throw std::invalid_argument("max size for " + e.info.id + " must lie in 1.." + std::to_string(e.info.max_size));
  if (options.jobs < 1 || options.jobs > max_jobs)
    throw std::invalid_argument("jobs must lie in 1.." + std::to_string(max_jobs));
  if ((e.uses & uses_box) && (options.box < 1 || options.box > max_box))
    throw std::invalid_argument("box must lie in 1.." + std::to_string(max_box));
  if ((e.uses & uses_cells) && (options.max_cells < 0 || options.max_cells > max_cells_ceiling))
    throw std::invalid_argument("max cells must lie in 0.." + std::to_string(max_cells_ceiling));
  if (e.uses & uses_k)
    for (int k : options.ks)
      if (k < 1 || k > 6) throw std::invalid_argument("k must lie in 1..6");
  if (e.uses & uses_tau)
    for (const auto& tau : options.taus)
      if (tau.size() > 4) throw std::invalid_argument("tau may have at most 4 letters");

  VerifyReport report;
  report.theorem = e.info.id;
  report.bounds = Json{{"max_size", n}};
  if (e.uses & uses_box) report.bounds["box"] = options.box;
  if (e.uses & uses_cells) report.bounds["max_cells"] = options.max_cells;
  if (e.uses & uses_k) report.bounds["k"] = Json(options.ks);
  if (e.uses & uses_tau) report.bounds["tau"] = pattern_list(options.taus);

  std::vector<Task> tasks = e.build(options, n);
  for (const TaskResult& r : run_all(tasks, options.jobs)) {
    report.checked += r.checked;
    if (report.passed && !r.counterexample.is_null()) {
      report.passed = false;
      report.counterexample = r.counterexample;
    }
  }
  return report;
}

}  // namespace peakval

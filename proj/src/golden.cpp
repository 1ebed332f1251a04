#include "peakval/golden.hpp"

#include "peakval/pipeline.hpp"

namespace peakval {

namespace {

Json skew_sample() {
  SkewShape shape(Partition{3, 2, 2}, Partition{1, 1});
  auto syt = enumerate_syt(shape);
  Json rows = Json::array();
  for (const auto& t : syt) {
    PeakValley pv = peak_valley(t);
    rows.push_back(Json{{"rows", Json(t.rows())}, {"peak", to_json(pv.peak)}, {"valley", to_json(pv.valley)}});
  }
  return Json{{"shape", to_json(shape)},
              {"count", syt.size()},
              {"tableaux", rows},
              {"peak", render(distribution(syt, Statistic::peak))},
              {"valley", render(distribution(syt, Statistic::valley))},
              {"joint", render(joint_distribution(syt))}};
}

Transversal sample_transversal() {
  return Transversal(Partition{9, 9, 9, 9, 6, 6, 4, 4, 4}, {6, 9, 7, 8, 5, 1, 3, 4, 2});
}

Json oscillating_sample() {
  Matching m = to_matching(sample_transversal());
  OscillatingTableau o = to_oscillating(m);
  return Json{{"matching", to_json(m)},
              {"shapes", to_json(o)},
              {"barred_word", to_string(barred_word(o))},
              {"max_rows", max_rows(o)},
              {"max_columns", max_columns(o)}};
}

Json knuth_sample() {
  Json cls = Json::array();
  for (const auto& p : knuth_class(parse_permutation("32154"))) cls.push_back(to_json(p));
  return Json{{"start", "32154"}, {"class", cls}};
}

Json tableau_sample() {
  auto syt = enumerate_syt(SkewShape(Partition{3, 2}));
  Json cls = Json::array();
  for (const auto& t : knuth_class(syt.front())) cls.push_back(Json(t.rows()));
  return Json{{"shape", to_json(Partition{3, 2})}, {"start", Json(syt.front().rows())}, {"class", cls}};
}

Json transversal_sample() {
  Transversal t = sample_transversal();
  Matching m = to_matching(t);
  PeakValley pv = peak_valley(t), tilde = tilde_peak_valley(t), pm = peak_valley(m);
  return Json{{"transversal", to_json(t)},
              {"matching", to_json(m)},
              {"type", m.type()},
              {"peak", to_json(pv.peak)},
              {"valley", to_json(pv.valley)},
              {"tilde_peak", to_json(tilde.peak)},
              {"tilde_valley", to_json(tilde.valley)},
              {"matching_peak", to_json(pm.peak)},
              {"matching_valley", to_json(pm.valley)}};
}

Json transfer_sample() {
  Transversal t(Partition{9, 9, 9, 9, 9, 8, 8, 8, 5}, parse_permutation("659421873").word());
  PatternTransfer r = pattern_transfer(t, 2, Permutation{1}, false);
  return Json{{"transversal", to_json(t)},
              {"k", 2},
              {"tau", "1"},
              {"coloring", to_json(r.coloring)},
              {"reduced_shape", to_json(r.coloring.reduced_shape)},
              {"reduced", to_json(r.coloring.reduced.as_permutation())},
              {"reduced_image", to_json(r.reduced_image.as_permutation())},
              {"image", to_json(r.image.as_permutation())},
              {"peak", to_json(peak_valley(t).peak)},
              {"image_peak", to_json(peak_valley(r.image).peak)}};
}

}  // namespace

Json golden_fixtures() {
  return Json{{"skew_tableaux", skew_sample()},    {"oscillating", oscillating_sample()},
              {"knuth_class", knuth_sample()},     {"tableau_class", tableau_sample()},
              {"transversal", transversal_sample()}, {"pattern_transfer", transfer_sample()}};
}

}  // namespace peakval

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "peakval/golden.hpp"
#include "peakval/json_io.hpp"
#include "peakval/pipeline.hpp"
#include "peakval/verify.hpp"

namespace peakval {

namespace {

constexpr std::uint64_t max_objects = 2'000'000;

struct Options {
  std::string format = "json";
  long long limit = -1;
  bool golden = false;

  std::string kind;
  std::string shape;
  std::string inner;
  bool symmetric = false;
  std::vector<std::string> avoid;
  int n = -1;

  std::string object;
  std::string stat = "peak";

  std::string map;
  std::string input;
  bool inverse = false;

  std::string cls;

  std::string theorem;
  int max_size = 0;
  int jobs = 1;
  int box = 6;
  int max_cells = 20;
  std::vector<int> ks;
  std::vector<std::string> taus;
  bool list = false;
};

class Output {
 public:
  Output(std::ostream& out, const Options& o) : out_(out), table_(o.format == "table") {}
  bool table() const { return table_; }
  void json(const Json& j) { out_ << j.dump(2) << '\n'; }
  void line(const std::string& s) { out_ << s << '\n'; }

 private:
  std::ostream& out_;
  bool table_;
};

std::vector<Permutation> patterns(const std::vector<std::string>& texts) {
  std::vector<Permutation> out;
  for (const auto& t : texts) out.push_back(parse_permutation(t));
  return out;
}

Json pattern_json(const std::vector<Permutation>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

SkewShape selected_skew(const Options& o) {
  if (o.shape.empty()) throw std::invalid_argument("--shape is required");
  Partition outer = parse_partition(o.shape);
  Partition inner = o.inner.empty() ? Partition{} : parse_partition(o.inner);
  return SkewShape(outer, inner);
}

int require_n(const Options& o, int ceiling) {
  if (o.n < 0) throw std::invalid_argument("--n is required");
  if (o.n > ceiling) throw std::invalid_argument("--n exceeds the limit " + std::to_string(ceiling));
  return o.n;
}

void check_objects(std::uint64_t count) {
  if (count > max_objects)
    throw std::invalid_argument("bound overflow: " + std::to_string(count) + " objects exceed the limit " +
                                std::to_string(max_objects));
}

std::uint64_t matching_count(int n) {
  std::uint64_t r = 1;
  for (int i = 1; i < 2 * n; i += 2) r *= static_cast<std::uint64_t>(i);
  return r;
}

// Transversals picked by --shape or --n, filtered by --symmetric and --avoid.
std::vector<Transversal> selected_transversals(const Options& o) {
  std::vector<Transversal> out;
  auto avoid = patterns(o.avoid);
  auto keep = [&](const Transversal& t) {
    if (avoids(t, avoid)) out.push_back(t);
  };
  if (!o.shape.empty()) {
    Partition lambda = parse_partition(o.shape);
    if (lambda.length() > 10) throw std::invalid_argument("bound overflow: shape has more than 10 rows");
    if (has_transversal(lambda)) for_each_transversal(lambda, o.symmetric, keep);
    else if (!is_admissible(lambda)) throw std::invalid_argument("shape " + to_string(lambda) + " is not admissible");
  } else {
    int n = require_n(o, 9);
    check_objects(matching_count(n));
    for_each_transversal_of_size(n, o.symmetric, keep);
  }
  return out;
}

std::vector<StandardTableau> selected_syt(const Options& o) {
  SkewShape s = selected_skew(o);
  std::uint64_t count = 0;
  try {
    count = count_syt(s);
  } catch (const std::overflow_error&) {
    count = max_objects + 1;
  }
  check_objects(count);
  return enumerate_syt(s);
}

std::vector<Matching> selected_matchings(const Options& o) {
  int n = require_n(o, 9);
  check_objects(matching_count(n));
  std::vector<Matching> out;
  for_each_matching(n, [&](const Matching& m) { out.push_back(m); });
  return out;
}

std::vector<OscillatingTableau> selected_oscillating(const Options& o) {
  int n = require_n(o, 9);
  check_objects(matching_count(n));
  std::vector<OscillatingTableau> out;
  for_each_oscillating(n, [&](const OscillatingTableau& x) { out.push_back(x); });
  return out;
}

template <class T, class ToJson, class ToText>
void emit_list(Output& out, const Options& o, const std::string& kind, const std::vector<T>& items, ToJson to_j,
               ToText to_text) {
  std::size_t shown = items.size();
  if (o.limit >= 0) shown = std::min<std::size_t>(shown, static_cast<std::size_t>(o.limit));
  if (out.table()) {
    for (std::size_t i = 0; i < shown; ++i) out.line(to_text(items[i]));
    out.line("count " + std::to_string(items.size()));
    return;
  }
  Json list = Json::array();
  for (std::size_t i = 0; i < shown; ++i) list.push_back(to_j(items[i]));
  out.json(Json{{"kind", kind}, {"count", items.size()}, {"items", list}});
}

std::string rows_text(const StandardTableau& t) {
  std::string s;
  for (const auto& row : t.rows()) {
    if (!s.empty()) s += " / ";
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? " " : "") + std::to_string(row[i]);
  }
  return s;
}

int cmd_enumerate(const Options& o, Output& out) {
  if (o.kind == "syt") {
    emit_list(out, o, o.kind, selected_syt(o), [](const auto& t) { return to_json(t); }, rows_text);
  } else if (o.kind == "transversals") {
    emit_list(out, o, o.kind, selected_transversals(o), [](const auto& t) { return to_json(t); },
              [](const auto& t) { return to_string(t); });
  } else if (o.kind == "matchings") {
    emit_list(out, o, o.kind, selected_matchings(o), [](const auto& m) { return to_json(m); },
              [](const auto& m) { return to_string(m); });
  } else if (o.kind == "oscillating") {
    emit_list(out, o, o.kind, selected_oscillating(o), [](const auto& x) { return to_json(x); },
              [](const auto& x) { return to_string(x); });
  } else {
    throw std::invalid_argument("unknown object kind: " + o.kind);
  }
  return 0;
}

template <class Range>
void emit_stats(Output& out, const Options& o, const Range& items) {
  std::string rendered;
  Json terms;
  if (o.stat == "joint") {
    JointSetPolynomial p = joint_distribution(items);
    rendered = render(p);
    terms = to_json(p);
  } else {
    SetPolynomial p = distribution(items, parse_statistic(o.stat));
    rendered = render(p);
    terms = to_json(p);
  }
  if (out.table()) {
    out.line(rendered);
    return;
  }
  out.json(Json{{"object", o.object}, {"stat", o.stat}, {"count", items.size()}, {"polynomial", rendered},
                {"terms", terms}});
}

std::vector<Permutation> class_members(PermutationClass cls, int n, const std::vector<Permutation>& avoid) {
  std::vector<Permutation> out;
  for_each_in_class(cls, n, [&](const Permutation& p) {
    if (avoids(p, avoid)) out.push_back(p);
  });
  return out;
}

int cmd_stats(const Options& o, Output& out) {
  if (o.object == "syt") {
    emit_stats(out, o, selected_syt(o));
  } else if (o.object == "words") {
    SkewShape s = selected_skew(o);
    check_objects(count_syt(s));
    emit_stats(out, o, enumerate_yamanouchi(s));
  } else if (o.object == "transversals") {
    emit_stats(out, o, selected_transversals(o));
  } else if (o.object == "matchings") {
    emit_stats(out, o, selected_matchings(o));
  } else if (o.object == "oscillating") {
    emit_stats(out, o, selected_oscillating(o));
  } else if (o.object == "S" || o.object == "A" || o.object == "I" || o.object == "AI") {
    emit_stats(out, o, class_members(parse_permutation_class(o.object), require_n(o, 10), patterns(o.avoid)));
  } else {
    throw std::invalid_argument("unknown object kind: " + o.object);
  }
  return 0;
}

Json read_input(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("--input is required");
  if (text.front() != '@') return parse_json(text);
  std::ifstream in(text.substr(1));
  if (!in) throw std::invalid_argument("cannot read input file " + text.substr(1));
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_json(body);
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string text_of(const Json& j) {
  if (!j.is_object()) return j.dump();
  if (j.contains("image")) return member(j.at("image"), "word").dump();
  if (j.contains("rows")) return member(j, "rows").dump();
  if (j.contains("permutation")) return member(j, "permutation").get<std::string>();
  if (j.contains("word")) return member(j, "word").dump();
  return j.dump();
}

Json apply_map(const Options& o, const Json& in) {
  const std::string& m = o.map;
  const bool inv = o.inverse;
  if (m == "alpha") {
    if (inv) return to_json(to_tableau(yamanouchi_from_json(in)));
    return to_json(to_yamanouchi_word(tableau_from_json(in)));
  }
  if (m == "beta") {
    if (inv) {
      SkewShape s = skew_shape_from_json(member(in, "shape"));
      return to_json(to_tableau(permutation_from_json(member(in, "permutation")), s));
    }
    StandardTableau t = tableau_from_json(in);
    return Json{{"shape", to_json(t.shape())}, {"permutation", to_json(to_yamanouchi_permutation(t))}};
  }
  if (m == "chi") {
    if (inv) return to_json(to_transversal(matching_from_json(in)));
    return to_json(to_matching(transversal_from_json(in)));
  }
  if (m == "phi") {
    if (inv) return to_json(to_matching(oscillating_from_json(in)));
    return to_json(to_oscillating(matching_from_json(in)));
  }
  if (m == "gamma") return to_json(conjugate_shapes(oscillating_from_json(in)));
  if (m == "psi") {
    OscillatingTableau x = oscillating_from_json(in);
    return to_json(inv ? exchange_runs_inverse(x) : exchange_runs(x));
  }
  if (m == "xi") {
    YamanouchiWord y = yamanouchi_from_json(in);
    return to_json(inv ? pair_peak_to_valley(y) : pair_valley_to_peak(y));
  }
  if (m == "Phi") return to_json(conjugation_involution(transversal_from_json(in)));
  if (m == "Psi") {
    Transversal t = transversal_from_json(in);
    return to_json(inv ? exchange_transversal_inverse(t) : exchange_transversal(t));
  }
  if (m == "theta") {
    Transversal t = transversal_from_json(in);
    int k = in.contains("k") ? in.at("k").get<int>() : 2;
    Permutation tau = in.contains("tau") ? permutation_from_json(in.at("tau")) : Permutation{1};
    bool sym = in.contains("symmetric") && in.at("symmetric").get<bool>();
    PatternTransfer r = inv ? pattern_transfer_inverse(t, k, tau, sym) : pattern_transfer(t, k, tau, sym);
    Json out = to_json(r.image);
    out["k"] = k;
    out["tau"] = to_json(tau);
    out["symmetric"] = sym;
    out["coloring"] = to_json(r.coloring);
    out["reduced_image"] = to_json(r.reduced_image);
    return out;
  }
  throw std::invalid_argument("unknown map: " + m);
}

int cmd_bijection(const Options& o, Output& out) {
  Json result = apply_map(o, read_input(o.input));
  if (out.table())
    out.line(text_of(result));
  else
    out.json(result);
  return 0;
}

int cmd_count(const Options& o, Output& out) {
  auto avoid = patterns(o.avoid);
  Statistic stat = parse_statistic(o.stat);
  ClassCount c;
  Json j{{"class", o.cls}};
  if (o.cls == "T" || o.cls == "ST") {
    bool sym = o.cls == "ST";
    if (!o.shape.empty()) {
      Partition lambda = parse_partition(o.shape);
      if (lambda.length() > 10) throw std::invalid_argument("bound overflow: shape has more than 10 rows");
      if (!is_admissible(lambda)) throw std::invalid_argument("shape " + to_string(lambda) + " is not admissible");
      j["shape"] = to_json(lambda);
      c = transversal_count(lambda, sym, avoid, stat);
    } else {
      int n = require_n(o, 9);
      j["n"] = n;
      c = transversal_count(n, sym, avoid, stat);
    }
  } else {
    PermutationClass cls = parse_permutation_class(o.cls);
    int ceiling = (cls == PermutationClass::all || cls == PermutationClass::alternating) ? 10 : 12;
    int n = require_n(o, ceiling);
    j["n"] = n;
    c = class_count(cls, n, avoid, stat);
  }
  if (out.table()) {
    out.line(std::to_string(c.count));
    return 0;
  }
  j["avoid"] = pattern_json(avoid);
  j["stat"] = to_string(stat);
  j["count"] = c.count;
  j["distribution"] = render(c.distribution);
  j["terms"] = to_json(c.distribution);
  out.json(j);
  return 0;
}

int cmd_verify(const Options& o, Output& out) {
  if (o.list) {
    Json list = Json::array();
    for (const auto& t : theorem_catalog()) {
      if (out.table())
        out.line(t.id + "  " + t.summary);
      else
        list.push_back(Json{{"id", t.id}, {"summary", t.summary}, {"default_size", t.default_size},
                            {"max_size", t.max_size}});
    }
    if (!out.table()) out.json(list);
    return 0;
  }
  if (o.theorem.empty()) throw std::invalid_argument("--theorem is required");
  VerifyOptions v;
  v.theorem = o.theorem;
  v.max_size = o.max_size;
  v.jobs = o.jobs;
  v.box = o.box;
  v.max_cells = o.max_cells;
  if (!o.ks.empty()) v.ks = o.ks;
  if (!o.taus.empty()) v.taus = patterns(o.taus);
  VerifyReport r = verify(v);
  if (out.table()) {
    out.line(r.theorem + " " + (r.passed ? "pass" : "fail") + " checked=" + std::to_string(r.checked) +
             " bounds=" + r.bounds.dump());
    if (!r.passed) out.line(r.counterexample.dump());
  } else {
    out.json(to_json(r));
  }
  return r.passed ? 0 : 1;
}

int cmd_golden(Output& out) {
  out.json(golden_fixtures());
  return 0;
}

void add_selection(CLI::App* sub, Options& o) {
  sub->add_option("--shape", o.shape, "Shape as comma separated parts");
  sub->add_option("--inner", o.inner, "Inner shape of a skew shape");
  sub->add_flag("--symmetric", o.symmetric, "Symmetric transversals only");
  sub->add_option("--avoid", o.avoid, "Pattern to avoid (repeatable)");
  sub->add_option("--n", o.n, "Size parameter");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Peak and valley statistics on tableaux, transversals and matchings"};
  app.name("peakval");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--limit", o.limit, "Maximum number of listed objects");
  app.add_flag("--golden", o.golden, "Print the worked example fixtures");
  app.require_subcommand(0, 1);
  app.fallthrough();

  auto* enumerate = app.add_subcommand("enumerate", "List objects");
  enumerate->add_option("kind", o.kind, "syt|transversals|matchings|oscillating")->required();
  add_selection(enumerate, o);

  auto* stats = app.add_subcommand("stats", "Distribution polynomials");
  stats->add_option("--object", o.object, "syt|words|transversals|matchings|oscillating|S|A|I|AI")->required();
  stats->add_option("--stat", o.stat, "peak|valley|tilde-peak|tilde-valley|joint");
  add_selection(stats, o);

  auto* bijection = app.add_subcommand("bijection", "Apply a bijection to a JSON object");
  bijection->add_option("map", o.map, "alpha|beta|chi|phi|gamma|psi|xi|Phi|Psi|theta")->required();
  bijection->add_option("--input", o.input, "JSON text or @file")->required();
  bijection->add_flag("--inverse", o.inverse, "Apply the inverse map");

  auto* count = app.add_subcommand("count", "Count a pattern avoiding class");
  count->add_option("--class", o.cls, "S|A|I|AI|T|ST")->required();
  count->add_option("--n", o.n, "Size");
  count->add_option("--avoid", o.avoid, "Pattern to avoid (repeatable)");
  count->add_option("--shape", o.shape, "Shape for T and ST");
  count->add_option("--stat", o.stat, "Statistic of the distribution");

  auto* verify_cmd = app.add_subcommand("verify", "Check a theorem exhaustively within bounds");
  verify_cmd->add_option("--theorem", o.theorem, "Theorem id");
  verify_cmd->add_option("--max-size", o.max_size, "Main size bound (0 for the default)");
  verify_cmd->add_option("--jobs", o.jobs, "Worker threads");
  verify_cmd->add_option("--box", o.box, "Box bounding outer shapes");
  verify_cmd->add_option("--max-cells", o.max_cells, "Cell bound for extra shapes");
  verify_cmd->add_option("--k", o.ks, "Pattern length k (repeatable)");
  verify_cmd->add_option("--tau", o.taus, "Pattern tau (repeatable)");
  verify_cmd->add_flag("--list", o.list, "List theorem ids");

  auto* golden = app.add_subcommand("golden", "Print the worked example fixtures");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Output output(out, o);
  try {
    if (o.golden || golden->parsed()) return cmd_golden(output);
    if (enumerate->parsed()) return cmd_enumerate(o, output);
    if (stats->parsed()) return cmd_stats(o, output);
    if (bijection->parsed()) return cmd_bijection(o, output);
    if (count->parsed()) return cmd_count(o, output);
    if (verify_cmd->parsed()) return cmd_verify(o, output);
    out << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace peakval

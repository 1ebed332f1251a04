#include "peakval/json_io.hpp"

#include <cctype>
#include <stdexcept>

namespace peakval {

namespace {

std::string quote_bare_keys(const std::string& text) {
  std::string out;
  bool in_string = false;
  char last_structural = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (in_string) {
      out += ch;
      if (ch == '\\' && i + 1 < text.size()) {
        out += text[++i];
      } else if (ch == '"') {
        in_string = false;
      }
      continue;
    }
    if (ch == '"') {
      in_string = true;
      out += ch;
      last_structural = 0;
      continue;
    }
    bool ident_start = std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
    if (ident_start && (last_structural == '{' || last_structural == ',')) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::size_t k = j;
      while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
      if (k < text.size() && text[k] == ':') {
        out += '"' + text.substr(i, j - i) + '"';
        i = j - 1;
        last_structural = 0;
        continue;
      }
    }
    if (!std::isspace(static_cast<unsigned char>(ch))) last_structural = ch;
    out += ch;
  }
  return out;
}

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(quote_bare_keys(text));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

Json to_json(IndexSet s) { return Json(s.elements()); }

IndexSet index_set_from_json(const Json& j) { return IndexSet(int_array(j, "set")); }

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) { return Partition::trimmed(int_array(j, "partition")); }

Json to_json(const SkewShape& s) {
  return Json{{"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}};
}

SkewShape skew_shape_from_json(const Json& j) {
  if (j.is_array()) return SkewShape(partition_from_json(j));
  Partition inner = j.contains("inner") ? partition_from_json(j.at("inner")) : Partition{};
  return SkewShape(partition_from_json(field(j, "outer")), inner);
}

Json to_json(const StandardTableau& t) {
  return Json{{"shape", to_json(t.shape())}, {"rows", Json(t.rows())}};
}

StandardTableau tableau_from_json(const Json& j) {
  std::vector<std::vector<int>> rows;
  const Json& r = field(j, "rows");
  if (!r.is_array()) throw std::invalid_argument("rows must be an array");
  for (const auto& row : r) rows.push_back(int_array(row, "row"));
  return StandardTableau(skew_shape_from_json(field(j, "shape")), rows);
}

Json to_json(const YamanouchiWord& y) {
  return Json{{"shape", to_json(y.shape())}, {"word", Json(y.letters())}};
}

YamanouchiWord yamanouchi_from_json(const Json& j) {
  return YamanouchiWord(skew_shape_from_json(field(j, "shape")), int_array(field(j, "word"), "word"));
}

Json to_json(const Permutation& p) { return Json(to_string(p)); }

Permutation permutation_from_json(const Json& j) {
  if (j.is_string()) return parse_permutation(j.get<std::string>());
  return Permutation(int_array(j, "permutation"));
}

Json to_json(const Transversal& t) {
  return Json{{"shape", to_json(t.shape())}, {"word", Json(t.word())}};
}

Transversal transversal_from_json(const Json& j) {
  const Json& w = field(j, "word");
  std::vector<int> word = w.is_string() ? parse_permutation(w.get<std::string>()).word()
                                        : int_array(w, "word");
  return Transversal(partition_from_json(field(j, "shape")), std::move(word));
}

Json to_json(const Matching& m) {
  Json out = Json::array();
  for (const Arc& a : m.arcs()) out.push_back(Json::array({a.opener, a.closer}));
  return out;
}

Matching matching_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matching must be an array of pairs");
  std::vector<Arc> arcs;
  for (const auto& pair : j) {
    auto v = int_array(pair, "arc");
    if (v.size() != 2) throw std::invalid_argument("arc must have two points");
    arcs.push_back({v[0], v[1]});
  }
  return Matching(std::move(arcs));
}

Json to_json(const OscillatingTableau& o) {
  Json out = Json::array();
  for (const auto& s : o.shapes()) out.push_back(to_json(s));
  return out;
}

OscillatingTableau oscillating_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("oscillating tableau must be an array of partitions");
  std::vector<Partition> shapes;
  for (const auto& s : j) shapes.push_back(partition_from_json(s));
  return OscillatingTableau(std::move(shapes));
}

Json barred_word_to_json(const BarredWord& y) { return Json(y); }

Json to_json(const PeakValley& pv) {
  return Json{{"peak", to_json(pv.peak)}, {"valley", to_json(pv.valley)}};
}

Json to_json(const SetPolynomial& p) {
  Json out = Json::array();
  for (const auto& [s, c] : p.terms()) out.push_back(Json{{"set", to_json(s)}, {"coeff", c}});
  return out;
}

SetPolynomial set_polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of terms");
  SetPolynomial p;
  for (const auto& term : j)
    p.add(index_set_from_json(field(term, "set")), field(term, "coeff").get<std::uint64_t>());
  return p;
}

Json to_json(const JointSetPolynomial& p) {
  Json out = Json::array();
  for (const auto& [k, c] : p.terms())
    out.push_back(Json{{"set", to_json(k.first)}, {"set2", to_json(k.second)}, {"coeff", c}});
  return out;
}

JointSetPolynomial joint_polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of terms");
  JointSetPolynomial p;
  for (const auto& term : j)
    p.add(index_set_from_json(field(term, "set")), index_set_from_json(field(term, "set2")),
          field(term, "coeff").get<std::uint64_t>());
  return p;
}

Json to_json(const BoardColoring& c) {
  Json white = Json::array();
  for (const Cell& cell : c.white) white.push_back(Json::array({cell.column, cell.row}));
  return Json{{"kept_columns", Json(c.kept_columns)},
              {"kept_rows", Json(c.kept_rows)},
              {"white", white},
              {"reduced", to_json(c.reduced)}};
}

}  // namespace peakval

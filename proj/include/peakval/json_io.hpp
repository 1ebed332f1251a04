#pragma once

#include <string>

#include <json.hpp>

#include "peakval/distributions.hpp"
#include "peakval/matchings.hpp"
#include "peakval/oscillating.hpp"
#include "peakval/permutations.hpp"
#include "peakval/shapes.hpp"
#include "peakval/tableaux.hpp"
#include "peakval/transversals.hpp"

namespace peakval {

using Json = nlohmann::ordered_json;

// Parses JSON, also accepting bare object keys such as {shape: [2,1]}.
Json parse_json(const std::string& text);

Json to_json(IndexSet s);
IndexSet index_set_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {"outer": [...], "inner": [...]}; a bare array is read as a straight shape.
Json to_json(const SkewShape& s);
SkewShape skew_shape_from_json(const Json& j);

// {"shape": skew shape, "rows": [[entries of row 1], ...]}
Json to_json(const StandardTableau& t);
StandardTableau tableau_from_json(const Json& j);

// {"shape": skew shape, "word": [...]}
Json to_json(const YamanouchiWord& y);
YamanouchiWord yamanouchi_from_json(const Json& j);

// Digit string when n <= 9, comma separated otherwise. Arrays are accepted.
Json to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

// {"shape": [...], "word": [...]}
Json to_json(const Transversal& t);
Transversal transversal_from_json(const Json& j);

// [[opener, closer], ...]
Json to_json(const Matching& m);
Matching matching_from_json(const Json& j);

// Array of partitions.
Json to_json(const OscillatingTableau& o);
OscillatingTableau oscillating_from_json(const Json& j);

// Signed letters, negative for barred.
Json barred_word_to_json(const BarredWord& y);

Json to_json(const PeakValley& pv);
// [{"set": [...], "coeff": c}, ...]
Json to_json(const SetPolynomial& p);
SetPolynomial set_polynomial_from_json(const Json& j);
// [{"set": [...], "set2": [...], "coeff": c}, ...]
Json to_json(const JointSetPolynomial& p);
JointSetPolynomial joint_polynomial_from_json(const Json& j);

Json to_json(const BoardColoring& c);

}  // namespace peakval

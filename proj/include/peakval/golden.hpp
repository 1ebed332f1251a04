#pragma once

#include "peakval/json_io.hpp"

namespace peakval {

// Worked examples recomputed by the library: the (3,2,2)/(1,1) tableau
// table, the oscillating tableau of the 9-column matching, the two Knuth
// classes, the 9-column transversal with its matching, and the coloring
// example. Keys: "skew_tableaux", "oscillating", "knuth_class", "tableau_class", "matching", "pattern_transfer".
Json golden_fixtures();

}  // namespace peakval

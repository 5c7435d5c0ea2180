#pragma once

#include <string>
#include <vector>

#include "core/types.hpp"

namespace vsrchart {

// Shortest decimal rendering that round-trips the value (so 10 and 10.0
// collide). Used for triplet categories on numeric axes and for value
// uniqueness accounting.
std::string canonical_decimal(double v);

// Flattens to one triplet per data point, series-major, point order
// preserved. The category label is the category string, or the canonical
// decimal rendering of the numeric x.
std::vector<Triplet> triplets_from(const ChartAnnotation& annotation);
std::vector<Triplet> triplets_from(const ParseResult& result);

}  // namespace vsrchart

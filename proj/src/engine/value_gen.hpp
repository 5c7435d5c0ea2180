#pragma once

#include <vector>

#include "common/rng.hpp"
#include "engine/generator_config.hpp"

namespace vsrchart::engine {

// One series of n raw values from the given family.
std::vector<double> generate_values(ValueGenKind kind, std::size_t n, Rng& rng);

// Affinely maps values into [lo, hi] (constant input maps to the midpoint),
// then rounds to 2 decimal places.
std::vector<double> rescale_to_band(const std::vector<double>& values, double lo,
                                    double hi);

// |Pearson r| of two equally sized series; 1.0 is returned for degenerate
// (constant) inputs so the rejection loop resamples them too.
double abs_pearson(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace vsrchart::engine

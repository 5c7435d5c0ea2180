#pragma once

#include <string>

#include "render/style.hpp"

namespace vsrchart::engine {

struct FilterResult {
  bool pass = true;
  std::string rule;  // first failing rule when pass == false

  explicit operator bool() const { return pass; }
};

// Heuristic stand-in for a learned chart-quality filter. Fails on:
//   text_overlap      a pair of text boxes overlapping > 10% of the smaller
//   low_contrast      a series color within channel distance 30 of background
//   legend_coverage   an inside legend covering > 25% of the plot area
//   anchor_occlusion  more than 30% of anchors flagged occluded
FilterResult quality_filter(const RenderedChart& chart);

}  // namespace vsrchart::engine

#include "engine/quality_filter.hpp"

#include <algorithm>

namespace vsrchart::engine {

namespace {

long long overlap_area(const TextBox& a, const TextBox& b) {
  const int x0 = std::max(a.x, b.x);
  const int y0 = std::max(a.y, b.y);
  const int x1 = std::min(a.x + a.w, b.x + b.w);
  const int y1 = std::min(a.y + a.h, b.y + b.h);
  if (x1 <= x0 || y1 <= y0) return 0;
  return static_cast<long long>(x1 - x0) * (y1 - y0);
}

}  // namespace

FilterResult quality_filter(const RenderedChart& chart) {
  const auto& meta = chart.meta;

  for (std::size_t i = 0; i < meta.text_boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < meta.text_boxes.size(); ++j) {
      const auto& a = meta.text_boxes[i];
      const auto& b = meta.text_boxes[j];
      const long long inter = overlap_area(a, b);
      if (inter == 0) continue;
      const long long smaller =
          std::min(static_cast<long long>(a.w) * a.h, static_cast<long long>(b.w) * b.h);
      if (smaller > 0 && double(inter) / double(smaller) > 0.10)
        return {false, "text_overlap"};
    }
  }

  const Rgb background = chart.image.get(0, 0);
  for (const auto& color : meta.series_colors) {
    if (channel_distance(color, background) < 30) return {false, "low_contrast"};
  }

  if (meta.legend_box) {
    const auto& plot = chart.annotation.calibration.plot_area_px;
    const long long legend_area =
        static_cast<long long>(meta.legend_box->width()) * meta.legend_box->height();
    const long long plot_area = static_cast<long long>(plot.width()) * plot.height();
    if (plot_area > 0 && double(legend_area) / double(plot_area) > 0.25)
      return {false, "legend_coverage"};
  }

  std::size_t total = 0, occluded = 0;
  for (const auto& s : chart.annotation.series) {
    for (const auto& p : s.points) {
      ++total;
      if (p.occluded) ++occluded;
    }
  }
  if (total > 0 && double(occluded) / double(total) > 0.30)
    return {false, "anchor_occlusion"};

  return {true, {}};
}

}  // namespace vsrchart::engine

#include "core/triplets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "core/calibration.hpp"

namespace vsrchart {

std::string canonical_decimal(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string category_of(const std::optional<std::string>& category,
                        const std::optional<double>& x) {
  if (category) return *category;
  if (x) return canonical_decimal(*x);
  return std::string{};
}

}  // namespace

std::vector<Triplet> triplets_from(const ChartAnnotation& annotation) {
  std::vector<Triplet> out;
  out.reserve(annotation.point_count());
  for (const auto& s : annotation.series)
    for (const auto& p : s.points)
      out.push_back(Triplet{s.label, category_of(p.category, p.x), p.y});
  return out;
}

std::vector<Triplet> triplets_from(const ParseResult& result) {
  std::vector<Triplet> out;
  for (const auto& s : result.series)
    for (const auto& p : s.points)
      out.push_back(Triplet{s.label, category_of(p.category, p.x), p.y});
  return out;
}

void ChartAnnotation::validate() const {
  calibration.validate();
  if (image.width <= 0 || image.height <= 0)
    throw ConfigError(chart_id + ": image dimensions must be positive");

  std::set<std::string> labels;
  for (const auto& s : series) {
    if (!labels.insert(s.label).second)
      throw ConfigError(chart_id + ": duplicate series label '" + s.label + "'");
  }

  const auto& rect = calibration.plot_area_px;
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      if (!std::isfinite(p.y))
        throw ConfigError(chart_id + ": non-finite y value in series '" + s.label + "'");
      if (p.px.x < rect.left - 2 || p.px.x > rect.right + 2 ||
          p.px.y < rect.top - 2 || p.px.y > rect.bottom + 2)
        throw ConfigError(chart_id + ": anchor outside plot area + 2 px");

      double x_value;
      if (p.x) {
        x_value = *p.x;
      } else if (p.category && x_axis.categories) {
        const auto& cats = *x_axis.categories;
        auto it = std::find(cats.begin(), cats.end(), *p.category);
        if (it == cats.end())
          throw ConfigError(chart_id + ": unknown category '" + *p.category + "'");
        x_value = double(it - cats.begin());
      } else {
        throw ConfigError(chart_id + ": point has neither x nor resolvable category");
      }
      const PixelPoint mapped = chart_to_pixel(calibration, ChartPoint{x_value, p.y});
      if (std::abs(mapped.x - p.px.x) > 1 || std::abs(mapped.y - p.px.y) > 1)
        throw ConfigError(chart_id + ": anchor disagrees with calibration by > 1 px");
    }
  }
}

void ParseResult::validate() const {
  for (const auto& s : series) {
    if (s.label.empty()) throw ConfigError(chart_id + ": empty series label");
    for (const auto& p : s.points) {
      if (!std::isfinite(p.y))
        throw ConfigError(chart_id + ": non-finite value in series '" + s.label + "'");
    }
  }
}

}  // namespace vsrchart

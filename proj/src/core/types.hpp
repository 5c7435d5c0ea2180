#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "common/errors.hpp"

namespace vsrchart {

struct PixelPoint {
  int x = 0;  // column, 0 at left
  int y = 0;  // row, 0 at top
  friend bool operator==(const PixelPoint&, const PixelPoint&) = default;
};

// x is the axis value for numeric axes, or a (possibly fractional) category
// slot index for categorical axes.
struct ChartPoint {
  double x = 0.0;
  double y = 0.0;
};

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Largest per-channel difference; the contrast measure used by the style
// invariants and the quality filter.
inline int channel_distance(Rgb a, Rgb b) {
  const int dr = std::abs(int(a.r) - int(b.r));
  const int dg = std::abs(int(a.g) - int(b.g));
  const int db = std::abs(int(a.b) - int(b.b));
  return std::max(dr, std::max(dg, db));
}

enum class ChartType { kLine, kBar, kGroupedBar, kScatter };
enum class AxisKind { kCategorical, kNumeric };

const char* chart_type_name(ChartType t);
ChartType chart_type_from_name(const std::string& name);

// Plot rectangle in pixel coordinates, corners inclusive.
struct PlotRect {
  int left = 0;
  int top = 0;
  int right = 0;
  int bottom = 0;
  int width() const { return right - left; }
  int height() const { return bottom - top; }
  friend bool operator==(const PlotRect&, const PlotRect&) = default;
};

// Affine pixel<->value mapping for one chart. The x side is either a numeric
// range or a list of category slot centers (pixel columns, strictly
// increasing).
struct AxisCalibration {
  PlotRect plot_area_px;
  std::optional<std::array<double, 2>> x_range;  // numeric axis
  std::vector<double> x_slots_px;                // categorical axis
  std::array<double, 2> y_range{0.0, 1.0};

  bool categorical() const { return !x_slots_px.empty(); }
  void validate() const;
};

// The unit SCRM compares.
struct Triplet {
  std::string series;
  std::string category;
  double value = 0.0;
  friend bool operator==(const Triplet&, const Triplet&) = default;
};

struct AnnotatedPoint {
  std::optional<std::string> category;
  std::optional<double> x;
  double y = 0.0;
  PixelPoint px;
  bool occluded = false;
};

struct SeriesAnnotation {
  std::string label;
  std::vector<AnnotatedPoint> points;
};

struct XAxisInfo {
  std::optional<std::string> label;
  AxisKind kind = AxisKind::kCategorical;
  std::optional<std::vector<std::string>> categories;
  std::optional<std::array<double, 2>> range;
};

struct YAxisInfo {
  std::optional<std::string> label;
  std::array<double, 2> range{0.0, 1.0};
};

struct ImageSize {
  int width = 0;
  int height = 0;
  friend bool operator==(const ImageSize&, const ImageSize&) = default;
};

// Ground truth for one rendered chart: values, per-point pixel anchors and
// the axis calibration that links them.
struct ChartAnnotation {
  std::string chart_id;
  ChartType chart_type = ChartType::kLine;
  std::optional<std::string> title;
  XAxisInfo x_axis;
  YAxisInfo y_axis;
  AxisCalibration calibration;
  ImageSize image;
  std::vector<SeriesAnnotation> series;

  std::size_t point_count() const {
    std::size_t n = 0;
    for (const auto& s : series) n += s.points.size();
    return n;
  }
  void validate() const;
};

struct ParsedPoint {
  std::optional<std::string> category;
  std::optional<double> x;
  double y = 0.0;
};

struct ParsedSeries {
  std::string label;
  std::vector<ParsedPoint> points;
};

// Structured output of the decode stage: annotation minus calibration and
// pixel anchors.
struct ParseResult {
  std::string chart_id;
  ChartType chart_type = ChartType::kLine;
  std::optional<std::string> title;
  XAxisInfo x_axis;
  YAxisInfo y_axis;
  std::vector<ParsedSeries> series;

  void validate() const;
};

// Derived by the renderer after anchor placement: anchors within 3 px of one
// another (and anchors hidden under an inside legend) are flagged on both
// sides.
void flag_occlusions(ChartAnnotation& annotation,
                     const std::optional<PlotRect>& legend_box);

}  // namespace vsrchart

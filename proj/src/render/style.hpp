#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/types.hpp"
#include "render/draw.hpp"
#include "render/image.hpp"

namespace vsrchart {

enum class LegendPosition { kTop, kRight, kBottom, kInside, kNone };

LegendPosition legend_position_from_name(const std::string& name);
const char* legend_position_name(LegendPosition pos);

struct StyleConfig {
  std::vector<Rgb> palette;
  Rgb background{255, 255, 255};
  double font_scale = 1.0;
  bool grid = true;
  LegendPosition legend_position = LegendPosition::kRight;
  MarkerShape marker_shape = MarkerShape::kCircle;
  int marker_size_px = 3;
  int line_width_px = 2;
  double bar_width_fraction = 0.8;

  // Palette non-empty and pairwise separated by channel distance >= 30
  // (the contrast rule the quality filter applies against the background).
  void validate() const;
};

// Renderable description of one chart. Categorical charts align each
// series' ys with `categories`; numeric charts carry per-series xs.
struct ChartSpec {
  struct Series {
    std::string label;
    std::vector<double> ys;
    std::vector<double> xs;  // numeric axis only
  };

  ChartType type = ChartType::kLine;
  std::optional<std::string> title;
  std::optional<std::string> x_label;
  std::optional<std::string> y_label;
  AxisKind x_kind = AxisKind::kCategorical;
  std::vector<std::string> categories;
  std::vector<Series> series;
};

struct TextBox {
  int x = 0, y = 0, w = 0, h = 0;
};

// Render-time facts the quality filter needs but the annotation schema does
// not carry.
struct RenderMeta {
  std::vector<TextBox> text_boxes;
  std::optional<PlotRect> legend_box;  // inside-plot legends only
  std::vector<Rgb> series_colors;
};

struct RenderedChart {
  Image image;
  ChartAnnotation annotation;
  RenderMeta meta;
};

}  // namespace vsrchart

#include "render/chart_renderer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/calibration.hpp"
#include "core/triplets.hpp"
#include "render/font.hpp"

namespace vsrchart {

LegendPosition legend_position_from_name(const std::string& name) {
  if (name == "top") return LegendPosition::kTop;
  if (name == "right") return LegendPosition::kRight;
  if (name == "bottom") return LegendPosition::kBottom;
  if (name == "inside") return LegendPosition::kInside;
  if (name == "none") return LegendPosition::kNone;
  throw ConfigError("unknown legend position: " + name);
}

const char* legend_position_name(LegendPosition pos) {
  switch (pos) {
    case LegendPosition::kTop: return "top";
    case LegendPosition::kRight: return "right";
    case LegendPosition::kBottom: return "bottom";
    case LegendPosition::kInside: return "inside";
    case LegendPosition::kNone: return "none";
  }
  return "none";
}

void StyleConfig::validate() const {
  if (palette.empty()) throw ConfigError("style: palette must be non-empty");
  for (std::size_t i = 0; i < palette.size(); ++i)
    for (std::size_t j = i + 1; j < palette.size(); ++j)
      if (channel_distance(palette[i], palette[j]) < 30)
        throw ConfigError("style: palette colors closer than channel distance 30");
  if (!(bar_width_fraction > 0.0 && bar_width_fraction <= 1.0))
    throw ConfigError("style: bar_width_fraction must be in (0, 1]");
  if (marker_size_px < 1) throw ConfigError("style: marker_size_px must be >= 1");
  if (line_width_px < 1) throw ConfigError("style: line_width_px must be >= 1");
  if (!(font_scale > 0.0)) throw ConfigError("style: font_scale must be positive");
}

namespace {

struct Ticks {
  std::vector<double> values;
  std::vector<std::string> labels;
};

std::string format_tick(double v, double step) {
  int decimals = 0;
  if (step < 1.0) decimals = std::min(6, int(std::ceil(-std::log10(step) + 0.5)));
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

Ticks nice_ticks(double lo, double hi, int target_count) {
  Ticks ticks;
  const double span = hi - lo;
  const double raw = span / std::max(1, target_count - 1);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  double step_norm = 10.0;
  for (double candidate : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    if (norm <= candidate) {
      step_norm = candidate;
      break;
    }
  }
  const double step = step_norm * mag;
  double v = std::ceil(lo / step) * step;
  while (v <= hi + step * 1e-9) {
    const double snapped = std::round(v / step) * step;
    ticks.values.push_back(snapped);
    ticks.labels.push_back(format_tick(snapped, step));
    v += step;
  }
  return ticks;
}

int dark_luma(Rgb c) { return (int(c.r) * 299 + int(c.g) * 587 + int(c.b) * 114) / 1000; }

Rgb ink_for(Rgb background) {
  return dark_luma(background) < 128 ? Rgb{235, 235, 235} : Rgb{30, 30, 30};
}

Rgb grid_color_for(Rgb background) {
  auto shift = [](std::uint8_t v) {
    const int d = v >= 128 ? -22 : 22;
    return static_cast<std::uint8_t>(std::clamp(int(v) + d, 0, 255));
  };
  return Rgb{shift(background.r), shift(background.g), shift(background.b)};
}

struct LegendLayout {
  bool shown = false;
  int entry_height = 0;
  int swatch = 0;
  int width = 0;   // widest entry (swatch + gap + text)
  int height = 0;  // stacked height (column layouts)
  int row_width = 0;  // single-row width (row layouts)
};

class Renderer {
 public:
  Renderer(const ChartSpec& spec, const StyleConfig& style, int width, int height,
           const std::string& chart_id)
      : spec_(spec), style_(style), width_(width), height_(height), chart_id_(chart_id) {}

  RenderedChart run() {
    validate_inputs();
    compute_ranges();
    layout();
    build_annotation();
    draw();
    flag_occlusions(annotation_, meta_.legend_box);
    RenderedChart out{std::move(image_), std::move(annotation_), std::move(meta_)};
    out.annotation.validate();
    return out;
  }

 private:
  static constexpr int kPad = 10;
  static constexpr int kTickLen = 4;
  static constexpr int kTickGap = 5;

  void validate_inputs() {
    if (width_ < 224 || height_ < 224)
      throw ConfigError(chart_id_ + ": raster must be at least 224x224");
    style_.validate();
    if (spec_.series.empty()) throw ConfigError(chart_id_ + ": spec has no series");
    const bool categorical = spec_.x_kind == AxisKind::kCategorical;
    if (bar_like() && !categorical)
      throw ConfigError(chart_id_ + ": bar charts require a categorical axis");
    if (categorical && spec_.categories.empty())
      throw ConfigError(chart_id_ + ": categorical axis without categories");
    for (const auto& s : spec_.series) {
      if (s.ys.empty()) throw ConfigError(chart_id_ + ": series '" + s.label + "' is empty");
      if (categorical && s.ys.size() != spec_.categories.size())
        throw ConfigError(chart_id_ + ": series '" + s.label + "' not aligned with categories");
      if (!categorical && s.xs.size() != s.ys.size())
        throw ConfigError(chart_id_ + ": series '" + s.label + "' xs/ys length mismatch");
      for (double y : s.ys)
        if (!std::isfinite(y)) throw ConfigError(chart_id_ + ": non-finite value");
    }
    font_px_ = std::clamp(int(std::lround(style_.font_scale)), 1, 3);
    title_px_ = std::min(font_px_ + 1, 4);
  }

  bool bar_like() const {
    return spec_.type == ChartType::kBar || spec_.type == ChartType::kGroupedBar;
  }

  void compute_ranges() {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& s : spec_.series)
      for (double y : s.ys) {
        lo = std::min(lo, y);
        hi = std::max(hi, y);
      }
    if (bar_like()) {
      if (lo <= 0.0)
        throw ConfigError(chart_id_ + ": bar charts require positive values");
      y_range_ = {0.0, hi * 1.12};
    } else {
      double span = hi - lo;
      const double pad = span > 0.0 ? span * 0.08 : std::max(std::abs(hi) * 0.1, 1.0);
      y_range_ = {lo - pad, hi + pad};
    }

    if (spec_.x_kind == AxisKind::kNumeric) {
      double xlo = std::numeric_limits<double>::infinity();
      double xhi = -xlo;
      for (const auto& s : spec_.series)
        for (double x : s.xs) {
          xlo = std::min(xlo, x);
          xhi = std::max(xhi, x);
        }
      double span = xhi - xlo;
      const double pad = span > 0.0 ? span * 0.04 : std::max(std::abs(xhi) * 0.1, 1.0);
      x_range_ = {xlo - pad, xhi + pad};
    }
  }

  LegendLayout legend_layout() const {
    LegendLayout l;
    if (style_.legend_position == LegendPosition::kNone) return l;
    if (spec_.series.size() < 2 && style_.legend_position != LegendPosition::kInside)
      return l;  // single-series outside legend adds nothing
    l.shown = true;
    l.swatch = 6 + 2 * font_px_;
    l.entry_height = std::max(text_height(font_px_), l.swatch) + 4;
    int max_text = 0;
    int total_row = 0;
    for (const auto& s : spec_.series) {
      const int tw = text_width(s.label, font_px_);
      max_text = std::max(max_text, tw);
      total_row += l.swatch + 4 + tw + 12;
    }
    l.width = l.swatch + 4 + max_text;
    l.height = int(spec_.series.size()) * l.entry_height;
    l.row_width = total_row;
    return l;
  }

  void layout() {
    const Ticks yticks_probe = nice_ticks(y_range_[0], y_range_[1], 5);
    int y_label_w = 0;
    for (const auto& t : yticks_probe.labels)
      y_label_w = std::max(y_label_w, text_width(t, font_px_));

    legend_ = legend_layout();

    int top = kPad;
    if (spec_.title) top += text_height(title_px_) + 8;
    if (spec_.y_label) top += text_height(font_px_) + 6;
    if (legend_.shown && style_.legend_position == LegendPosition::kTop)
      top += legend_.entry_height + 4;

    int bottom = kPad + kTickLen + kTickGap + text_height(font_px_);
    if (spec_.x_label) bottom += text_height(font_px_) + 6;
    if (legend_.shown && style_.legend_position == LegendPosition::kBottom)
      bottom += legend_.entry_height + 4;

    int left = kPad + y_label_w + kTickGap + kTickLen;
    int right = kPad + 4;
    if (legend_.shown && style_.legend_position == LegendPosition::kRight)
      right += legend_.width + 10;

    plot_ = PlotRect{left, top, width_ - 1 - right, height_ - 1 - bottom};
    if (plot_.width() < 120 || plot_.height() < 90)
      throw LayoutError(chart_id_ + ": plot area too small after margins");
    if (spec_.title && text_width(*spec_.title, title_px_) > width_ - 2 * kPad)
      throw LayoutError(chart_id_ + ": title does not fit");
    if (legend_.shown) {
      if (style_.legend_position == LegendPosition::kRight &&
          legend_.height > plot_.height())
        throw LayoutError(chart_id_ + ": legend does not fit");
      if ((style_.legend_position == LegendPosition::kTop ||
           style_.legend_position == LegendPosition::kBottom) &&
          legend_.row_width > width_ - 2 * kPad)
        throw LayoutError(chart_id_ + ": legend does not fit");
      if (style_.legend_position == LegendPosition::kInside &&
          (legend_.width + 12 > plot_.width() || legend_.height + 12 > plot_.height()))
        throw LayoutError(chart_id_ + ": legend does not fit");
    }

    calibration_.plot_area_px = plot_;
    calibration_.y_range = y_range_;
    if (spec_.x_kind == AxisKind::kCategorical) {
      const std::size_t n = spec_.categories.size();
      calibration_.x_slots_px.clear();
      for (std::size_t i = 0; i < n; ++i)
        calibration_.x_slots_px.push_back(plot_.left + (double(i) + 0.5) *
                                                           double(plot_.width()) / double(n));
    } else {
      calibration_.x_range = x_range_;
    }
    calibration_.validate();
  }

  // Pixel geometry of the bar for (category, series); also used to pin the
  // anchor to the drawn bar's top-center column.
  struct BarRect {
    int x0, x1;
  };
  BarRect bar_columns(std::size_t category, std::size_t series_index) const {
    const double slot_w = double(plot_.width()) / double(spec_.categories.size());
    const double slot_center = calibration_.x_slots_px[category];
    const double group_w = slot_w * style_.bar_width_fraction;
    const double nseries = spec_.type == ChartType::kGroupedBar ? double(spec_.series.size()) : 1.0;
    const double bar_w = group_w / nseries;
    const double si = spec_.type == ChartType::kGroupedBar ? double(series_index) : 0.0;
    const double center = slot_center + (si + 0.5 - nseries / 2.0) * bar_w;
    int x0 = round_half_even(center - bar_w / 2.0);
    int x1 = round_half_even(center + bar_w / 2.0) - 1;
    if (x1 < x0) x1 = x0;
    return BarRect{x0, x1};
  }

  void build_annotation() {
    annotation_.chart_id = chart_id_;
    annotation_.chart_type = spec_.type;
    annotation_.title = spec_.title;
    annotation_.x_axis.label = spec_.x_label;
    annotation_.x_axis.kind = spec_.x_kind;
    if (spec_.x_kind == AxisKind::kCategorical)
      annotation_.x_axis.categories = spec_.categories;
    else
      annotation_.x_axis.range = x_range_;
    annotation_.y_axis.label = spec_.y_label;
    annotation_.y_axis.range = y_range_;
    annotation_.calibration = calibration_;
    annotation_.image = ImageSize{width_, height_};

    for (std::size_t si = 0; si < spec_.series.size(); ++si) {
      const auto& s = spec_.series[si];
      SeriesAnnotation sa;
      sa.label = s.label;
      for (std::size_t pi = 0; pi < s.ys.size(); ++pi) {
        AnnotatedPoint p;
        p.y = s.ys[pi];
        if (spec_.x_kind == AxisKind::kCategorical) {
          p.category = spec_.categories[pi];
          if (bar_like()) {
            const BarRect bar = bar_columns(pi, si);
            const int anchor_col = (bar.x0 + bar.x1) / 2;
            p.x = x_value_at_column(calibration_, double(anchor_col));
            p.px = chart_to_pixel(calibration_, ChartPoint{*p.x, p.y});
          } else {
            p.px = chart_to_pixel(calibration_, ChartPoint{double(pi), p.y});
          }
        } else {
          p.x = s.xs[pi];
          p.px = chart_to_pixel(calibration_, ChartPoint{*p.x, p.y});
        }
        sa.points.push_back(std::move(p));
      }
      annotation_.series.push_back(std::move(sa));
    }
  }

  Rgb series_color(std::size_t si) const {
    return style_.palette[si % style_.palette.size()];
  }

  void add_text(int x, int y, const std::string& text, Rgb color, int scale) {
    draw_text(image_, x, y, text, color, scale);
    meta_.text_boxes.push_back(TextBox{x, y, text_width(text, scale), text_height(scale)});
  }

  void draw_grid_and_axes(const Ticks& yticks) {
    const Rgb grid = grid_color_for(style_.background);
    const Rgb ink = ink_for(style_.background);

    if (style_.grid) {
      for (double v : yticks.values) {
        const int row = chart_to_pixel(calibration_, ChartPoint{x_mid_value(), v}).y;
        fill_rect(image_, plot_.left, row, plot_.right, row, grid);
      }
      if (spec_.x_kind == AxisKind::kCategorical) {
        for (double col : calibration_.x_slots_px) {
          const int c = round_half_even(col);
          fill_rect(image_, c, plot_.top, c, plot_.bottom, grid);
        }
      } else {
        for (double v : xticks_.values) {
          const int col = chart_to_pixel(calibration_, ChartPoint{v, y_range_[0]}).x;
          fill_rect(image_, col, plot_.top, col, plot_.bottom, grid);
        }
      }
    }

    fill_rect(image_, plot_.left, plot_.top, plot_.left, plot_.bottom, ink);
    fill_rect(image_, plot_.left, plot_.bottom, plot_.right, plot_.bottom, ink);

    for (std::size_t i = 0; i < yticks.values.size(); ++i) {
      const int row = chart_to_pixel(calibration_, ChartPoint{x_mid_value(), yticks.values[i]}).y;
      fill_rect(image_, plot_.left - kTickLen, row, plot_.left - 1, row, ink);
      const int tw = text_width(yticks.labels[i], font_px_);
      add_text(plot_.left - kTickLen - kTickGap - tw, row - text_height(font_px_) / 2,
               yticks.labels[i], ink, font_px_);
    }

    const int label_y = plot_.bottom + kTickLen + kTickGap;
    if (spec_.x_kind == AxisKind::kCategorical) {
      const std::size_t n = spec_.categories.size();
      int max_w = 0;
      for (const auto& c : spec_.categories) max_w = std::max(max_w, text_width(c, font_px_));
      const double slot_w = double(plot_.width()) / double(n);
      std::size_t step = 1;
      while (step < n && double(step) * slot_w < double(max_w + 8)) ++step;
      if (step >= n && text_width(spec_.categories[0], font_px_) > plot_.width())
        throw LayoutError(chart_id_ + ": category labels do not fit");
      for (std::size_t i = 0; i < n; i += step) {
        const int col = round_half_even(calibration_.x_slots_px[i]);
        fill_rect(image_, col, plot_.bottom + 1, col, plot_.bottom + kTickLen, ink);
        const int tw = text_width(spec_.categories[i], font_px_);
        int tx = std::clamp(col - tw / 2, 1, width_ - tw - 1);
        add_text(tx, label_y, spec_.categories[i], ink, font_px_);
      }
    } else {
      for (std::size_t i = 0; i < xticks_.values.size(); ++i) {
        const int col = chart_to_pixel(calibration_, ChartPoint{xticks_.values[i], y_range_[0]}).x;
        fill_rect(image_, col, plot_.bottom + 1, col, plot_.bottom + kTickLen, ink);
        const int tw = text_width(xticks_.labels[i], font_px_);
        int tx = std::clamp(col - tw / 2, 1, width_ - tw - 1);
        add_text(tx, label_y, xticks_.labels[i], ink, font_px_);
      }
    }
  }

  double x_mid_value() const {
    if (calibration_.categorical()) return (double(calibration_.x_slots_px.size()) - 1.0) / 2.0;
    return ((*calibration_.x_range)[0] + (*calibration_.x_range)[1]) / 2.0;
  }

  void draw_data() {
    const int baseline = plot_.bottom;
    if (bar_like()) {
      for (std::size_t si = 0; si < spec_.series.size(); ++si) {
        const Rgb color = series_color(si);
        const auto& points = annotation_.series[si].points;
        for (std::size_t pi = 0; pi < points.size(); ++pi) {
          const BarRect bar = bar_columns(pi, si);
          const int top = std::min(points[pi].px.y, baseline - 1);
          fill_rect(image_, bar.x0, top, bar.x1, baseline - 1, color);
        }
      }
    } else if (spec_.type == ChartType::kLine) {
      for (std::size_t si = 0; si < spec_.series.size(); ++si) {
        const Rgb color = series_color(si);
        const auto& points = annotation_.series[si].points;
        for (std::size_t pi = 1; pi < points.size(); ++pi) {
          draw_line(image_, points[pi - 1].px.x, points[pi - 1].px.y, points[pi].px.x,
                    points[pi].px.y, style_.line_width_px, color);
        }
      }
      // Vertex dots go on top of every stroke so anchor probes see the
      // series color; radius <= 3 keeps overdraw within the occlusion rule.
      const int dot_r = std::clamp(style_.line_width_px / 2 + 1, 2, 3);
      for (std::size_t si = 0; si < spec_.series.size(); ++si) {
        const Rgb color = series_color(si);
        for (const auto& p : annotation_.series[si].points)
          fill_circle(image_, p.px.x, p.px.y, dot_r, color);
      }
    } else {  // scatter
      const int size = std::clamp(style_.marker_size_px, 2, 3);
      for (std::size_t si = 0; si < spec_.series.size(); ++si) {
        const Rgb color = series_color(si);
        for (const auto& p : annotation_.series[si].points)
          fill_marker(image_, p.px, style_.marker_shape, size, color);
      }
    }
    for (std::size_t si = 0; si < spec_.series.size(); ++si)
      meta_.series_colors.push_back(series_color(si));
  }

  void draw_legend() {
    if (!legend_.shown) return;
    const Rgb ink = ink_for(style_.background);
    auto draw_entry = [&](int x, int y, std::size_t si) {
      fill_rect(image_, x, y + 2, x + legend_.swatch - 1, y + 2 + legend_.swatch - 1,
                series_color(si));
      add_text(x + legend_.swatch + 4, y + 2, spec_.series[si].label, ink, font_px_);
    };

    switch (style_.legend_position) {
      case LegendPosition::kTop: {
        int x = std::max(kPad, (width_ - legend_.row_width) / 2);
        const int y = plot_.top - legend_.entry_height - 2;
        for (std::size_t si = 0; si < spec_.series.size(); ++si) {
          draw_entry(x, y, si);
          x += legend_.swatch + 4 + text_width(spec_.series[si].label, font_px_) + 12;
        }
        break;
      }
      case LegendPosition::kBottom: {
        int x = std::max(kPad, (width_ - legend_.row_width) / 2);
        const int y = height_ - kPad - legend_.entry_height;
        for (std::size_t si = 0; si < spec_.series.size(); ++si) {
          draw_entry(x, y, si);
          x += legend_.swatch + 4 + text_width(spec_.series[si].label, font_px_) + 12;
        }
        break;
      }
      case LegendPosition::kRight: {
        const int x = plot_.right + 10;
        int y = plot_.top + 2;
        for (std::size_t si = 0; si < spec_.series.size(); ++si) {
          draw_entry(x, y, si);
          y += legend_.entry_height;
        }
        break;
      }
      case LegendPosition::kInside: {
        const int w = legend_.width + 10;
        const int h = legend_.height + 6;
        const PlotRect box{plot_.right - w - 6, plot_.top + 6, plot_.right - 6,
                           plot_.top + 6 + h};
        fill_rect(image_, box.left, box.top, box.right, box.bottom, style_.background);
        const Rgb border = ink_for(style_.background);
        fill_rect(image_, box.left, box.top, box.right, box.top, border);
        fill_rect(image_, box.left, box.bottom, box.right, box.bottom, border);
        fill_rect(image_, box.left, box.top, box.left, box.bottom, border);
        fill_rect(image_, box.right, box.top, box.right, box.bottom, border);
        int y = box.top + 4;
        for (std::size_t si = 0; si < spec_.series.size(); ++si) {
          draw_entry(box.left + 5, y, si);
          y += legend_.entry_height;
        }
        meta_.legend_box = box;
        break;
      }
      case LegendPosition::kNone:
        break;
    }
  }

  void draw() {
    image_ = Image(width_, height_, style_.background);
    const Rgb ink = ink_for(style_.background);

    if (spec_.x_kind == AxisKind::kNumeric)
      xticks_ = nice_ticks(x_range_[0], x_range_[1], 6);
    const Ticks yticks = nice_ticks(y_range_[0], y_range_[1], 5);

    int cursor_y = kPad;
    if (spec_.title) {
      const int tw = text_width(*spec_.title, title_px_);
      add_text(std::max(kPad, (width_ - tw) / 2), cursor_y, *spec_.title, ink, title_px_);
      cursor_y += text_height(title_px_) + 8;
    }
    if (spec_.y_label) {
      add_text(kPad, cursor_y, *spec_.y_label, ink, font_px_);
    }
    if (spec_.x_label) {
      const int tw = text_width(*spec_.x_label, font_px_);
      const int cx = plot_.left + (plot_.width() - tw) / 2;
      add_text(std::max(kPad, cx), height_ - kPad - text_height(font_px_) -
                   (legend_.shown && style_.legend_position == LegendPosition::kBottom
                        ? legend_.entry_height + 4
                        : 0),
               *spec_.x_label, ink, font_px_);
    }

    draw_grid_and_axes(yticks);
    draw_data();
    draw_legend();
  }

  const ChartSpec& spec_;
  StyleConfig style_;
  int width_;
  int height_;
  std::string chart_id_;

  int font_px_ = 1;
  int title_px_ = 2;
  std::array<double, 2> y_range_{0.0, 1.0};
  std::array<double, 2> x_range_{0.0, 1.0};
  PlotRect plot_;
  AxisCalibration calibration_;
  LegendLayout legend_;
  Ticks xticks_;
  ChartAnnotation annotation_;
  RenderMeta meta_;
  Image image_;
};

}  // namespace

RenderedChart rasterize(const ChartSpec& spec, const StyleConfig& style, int width,
                        int height, const std::string& chart_id) {
  Renderer renderer(spec, style, width, height, chart_id);
  return renderer.run();
}

}  // namespace vsrchart

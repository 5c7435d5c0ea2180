#include "core/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace vsrchart {

namespace {

constexpr double kRangeTolerance = 1e-9;

double slot_spacing(const AxisCalibration& cal) {
  const auto& slots = cal.x_slots_px;
  if (slots.size() >= 2) return (slots.back() - slots.front()) / double(slots.size() - 1);
  return double(cal.plot_area_px.width());
}

}  // namespace

const char* chart_type_name(ChartType t) {
  switch (t) {
    case ChartType::kLine: return "line";
    case ChartType::kBar: return "bar";
    case ChartType::kGroupedBar: return "grouped_bar";
    case ChartType::kScatter: return "scatter";
  }
  return "line";
}

ChartType chart_type_from_name(const std::string& name) {
  if (name == "line") return ChartType::kLine;
  if (name == "bar") return ChartType::kBar;
  if (name == "grouped_bar") return ChartType::kGroupedBar;
  if (name == "scatter") return ChartType::kScatter;
  throw ConfigError("unknown chart type: " + name);
}

int round_half_even(double v) {
  const double f = std::floor(v);
  const double frac = v - f;
  long long base = static_cast<long long>(f);
  if (frac > 0.5) return static_cast<int>(base + 1);
  if (frac < 0.5) return static_cast<int>(base);
  return static_cast<int>(base % 2 == 0 ? base : base + 1);
}

void AxisCalibration::validate() const {
  const auto& r = plot_area_px;
  if (r.left >= r.right || r.top >= r.bottom)
    throw ConfigError("calibration: degenerate plot area");
  if (!(y_range[0] < y_range[1]))
    throw ConfigError("calibration: y_range min must be < max");
  if (categorical()) {
    for (std::size_t i = 1; i < x_slots_px.size(); ++i) {
      if (!(x_slots_px[i - 1] < x_slots_px[i]))
        throw ConfigError("calibration: slot positions must be strictly increasing");
    }
  } else {
    if (!x_range) throw ConfigError("calibration: missing x_range for numeric axis");
    if (!((*x_range)[0] < (*x_range)[1]))
      throw ConfigError("calibration: x_range min must be < max");
  }
}

PixelPoint chart_to_pixel(const AxisCalibration& cal, const ChartPoint& p) {
  const auto& rect = cal.plot_area_px;
  double px_x;
  if (cal.categorical()) {
    const double n = double(cal.x_slots_px.size());
    if (p.x < -0.5 - kRangeTolerance || p.x > n - 0.5 + kRangeTolerance) {
      std::ostringstream msg;
      msg << "categorical index " << p.x << " outside [-0.5, " << (n - 0.5) << "]";
      throw OutOfRangeError(msg.str());
    }
    const auto& slots = cal.x_slots_px;
    const double spacing = slot_spacing(cal);
    if (slots.size() == 1) {
      px_x = slots[0] + p.x * spacing;
    } else if (p.x <= 0.0) {
      px_x = slots[0] + p.x * spacing;
    } else if (p.x >= double(slots.size() - 1)) {
      px_x = slots.back() + (p.x - double(slots.size() - 1)) * spacing;
    } else {
      const std::size_t i = static_cast<std::size_t>(std::floor(p.x));
      const double t = p.x - double(i);
      px_x = slots[i] + t * (slots[i + 1] - slots[i]);
    }
  } else {
    const auto& xr = *cal.x_range;
    const double span = xr[1] - xr[0];
    if (p.x < xr[0] - kRangeTolerance * std::abs(span) - kRangeTolerance ||
        p.x > xr[1] + kRangeTolerance * std::abs(span) + kRangeTolerance) {
      std::ostringstream msg;
      msg << "x value " << p.x << " outside [" << xr[0] << ", " << xr[1] << "]";
      throw OutOfRangeError(msg.str());
    }
    px_x = rect.left + (p.x - xr[0]) / span * (rect.right - rect.left);
  }

  const auto& yr = cal.y_range;
  const double yspan = yr[1] - yr[0];
  if (p.y < yr[0] - kRangeTolerance * std::abs(yspan) - kRangeTolerance ||
      p.y > yr[1] + kRangeTolerance * std::abs(yspan) + kRangeTolerance) {
    std::ostringstream msg;
    msg << "y value " << p.y << " outside [" << yr[0] << ", " << yr[1] << "]";
    throw OutOfRangeError(msg.str());
  }
  const double px_y = rect.bottom - (p.y - yr[0]) / yspan * (rect.bottom - rect.top);
  return PixelPoint{round_half_even(px_x), round_half_even(px_y)};
}

ChartPoint pixel_to_chart(const AxisCalibration& cal, const PixelPoint& px) {
  const auto& rect = cal.plot_area_px;
  if (px.x < rect.left - 2 || px.x > rect.right + 2 || px.y < rect.top - 2 ||
      px.y > rect.bottom + 2) {
    std::ostringstream msg;
    msg << "pixel (" << px.x << ", " << px.y << ") outside plot area ["
        << rect.left << ", " << rect.top << ", " << rect.right << ", "
        << rect.bottom << "] + 2 px";
    throw OutOfRangeError(msg.str());
  }

  double x_value;
  if (cal.categorical()) {
    const auto& slots = cal.x_slots_px;
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const double d = std::abs(double(px.x) - slots[i]);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    x_value = double(best);
  } else {
    const auto& xr = *cal.x_range;
    x_value = xr[0] + (double(px.x) - rect.left) / double(rect.right - rect.left) *
                          (xr[1] - xr[0]);
  }

  const auto& yr = cal.y_range;
  const double y_value =
      yr[0] + (double(rect.bottom) - px.y) / double(rect.bottom - rect.top) *
                  (yr[1] - yr[0]);
  return ChartPoint{x_value, y_value};
}

double x_value_at_column(const AxisCalibration& cal, double column) {
  const auto& rect = cal.plot_area_px;
  if (cal.categorical()) {
    const auto& slots = cal.x_slots_px;
    const double spacing = slot_spacing(cal);
    if (slots.size() == 1 || column <= slots.front())
      return (column - slots.front()) / spacing;
    if (column >= slots.back())
      return double(slots.size() - 1) + (column - slots.back()) / spacing;
    for (std::size_t i = 0; i + 1 < slots.size(); ++i) {
      if (column <= slots[i + 1])
        return double(i) + (column - slots[i]) / (slots[i + 1] - slots[i]);
    }
    return double(slots.size() - 1);
  }
  const auto& xr = *cal.x_range;
  return xr[0] + (column - rect.left) / double(rect.right - rect.left) * (xr[1] - xr[0]);
}

void flag_occlusions(ChartAnnotation& annotation,
                     const std::optional<PlotRect>& legend_box) {
  std::vector<AnnotatedPoint*> points;
  for (auto& s : annotation.series)
    for (auto& p : s.points) points.push_back(&p);

  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double dx = points[i]->px.x - points[j]->px.x;
      const double dy = points[i]->px.y - points[j]->px.y;
      if (dx * dx + dy * dy <= 9.0) {
        points[i]->occluded = true;
        points[j]->occluded = true;
      }
    }
  }
  if (legend_box) {
    for (auto* p : points) {
      if (p->px.x >= legend_box->left && p->px.x <= legend_box->right &&
          p->px.y >= legend_box->top && p->px.y <= legend_box->bottom)
        p->occluded = true;
    }
  }
}

}  // namespace vsrchart

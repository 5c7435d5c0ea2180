#include <algorithm>
#include <cmath>

#include "core/calibration.hpp"
#include "render/chart_renderer.hpp"

namespace vsrchart {

namespace {

Image bilinear_resize(const Image& src, int new_w, int new_h) {
  Image dst(new_w, new_h);
  const double sx = double(src.width()) / double(new_w);
  const double sy = double(src.height()) / double(new_h);
  for (int y = 0; y < new_h; ++y) {
    const double fy = (double(y) + 0.5) * sy - 0.5;
    const int y0 = std::clamp(int(std::floor(fy)), 0, src.height() - 1);
    const int y1 = std::min(y0 + 1, src.height() - 1);
    const double wy = std::clamp(fy - double(y0), 0.0, 1.0);
    for (int x = 0; x < new_w; ++x) {
      const double fx = (double(x) + 0.5) * sx - 0.5;
      const int x0 = std::clamp(int(std::floor(fx)), 0, src.width() - 1);
      const int x1 = std::min(x0 + 1, src.width() - 1);
      const double wx = std::clamp(fx - double(x0), 0.0, 1.0);
      const Rgb c00 = src.get(x0, y0), c10 = src.get(x1, y0);
      const Rgb c01 = src.get(x0, y1), c11 = src.get(x1, y1);
      auto lerp2 = [&](std::uint8_t a, std::uint8_t b, std::uint8_t c, std::uint8_t d) {
        const double top = double(a) * (1.0 - wx) + double(b) * wx;
        const double bot = double(c) * (1.0 - wx) + double(d) * wx;
        return static_cast<std::uint8_t>(
            std::clamp(std::lround(top * (1.0 - wy) + bot * wy), 0L, 255L));
      };
      dst.set(x, y, Rgb{lerp2(c00.r, c10.r, c01.r, c11.r), lerp2(c00.g, c10.g, c01.g, c11.g),
                        lerp2(c00.b, c10.b, c01.b, c11.b)});
    }
  }
  return dst;
}

}  // namespace

RenderedChart resize_longest(const RenderedChart& chart, int target) {
  if (target < 28 || target % 28 != 0)
    throw UsageError("resize target must be a positive multiple of 28");
  const int w = chart.image.width();
  const int h = chart.image.height();
  const int longer = std::max(w, h);
  if (longer == target) return chart;

  const double scale = double(target) / double(longer);
  const int new_w = w >= h ? target : std::max(1, int(std::lround(double(w) * scale)));
  const int new_h = h > w ? target : std::max(1, int(std::lround(double(h) * scale)));

  RenderedChart out;
  out.image = bilinear_resize(chart.image, new_w, new_h);
  out.annotation = chart.annotation;
  out.meta = chart.meta;
  out.annotation.image = ImageSize{new_w, new_h};

  auto scale_px = [scale](PixelPoint p) {
    return PixelPoint{round_half_even(double(p.x) * scale),
                      round_half_even(double(p.y) * scale)};
  };

  auto& cal = out.annotation.calibration;
  cal.plot_area_px = PlotRect{round_half_even(double(cal.plot_area_px.left) * scale),
                              round_half_even(double(cal.plot_area_px.top) * scale),
                              round_half_even(double(cal.plot_area_px.right) * scale),
                              round_half_even(double(cal.plot_area_px.bottom) * scale)};
  for (auto& slot : cal.x_slots_px) slot *= scale;
  for (auto& series : out.annotation.series)
    for (auto& p : series.points) p.px = scale_px(p.px);

  if (out.meta.legend_box) {
    out.meta.legend_box = PlotRect{round_half_even(double(out.meta.legend_box->left) * scale),
                                   round_half_even(double(out.meta.legend_box->top) * scale),
                                   round_half_even(double(out.meta.legend_box->right) * scale),
                                   round_half_even(double(out.meta.legend_box->bottom) * scale)};
  }
  for (auto& box : out.meta.text_boxes) {
    box = TextBox{round_half_even(double(box.x) * scale), round_half_even(double(box.y) * scale),
                  round_half_even(double(box.w) * scale), round_half_even(double(box.h) * scale)};
  }
  return out;
}

}  // namespace vsrchart

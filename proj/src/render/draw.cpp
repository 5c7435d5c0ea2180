#include "render/draw.hpp"

#include <algorithm>
#include <cmath>

namespace vsrchart {

MarkerShape marker_shape_from_name(const std::string& name) {
  if (name == "circle") return MarkerShape::kCircle;
  if (name == "square") return MarkerShape::kSquare;
  if (name == "triangle") return MarkerShape::kTriangle;
  if (name == "diamond") return MarkerShape::kDiamond;
  throw ConfigError("unknown marker shape: " + name);
}

const char* marker_shape_name(MarkerShape shape) {
  switch (shape) {
    case MarkerShape::kCircle: return "circle";
    case MarkerShape::kSquare: return "square";
    case MarkerShape::kTriangle: return "triangle";
    case MarkerShape::kDiamond: return "diamond";
  }
  return "circle";
}

void fill_rect(Image& image, int x0, int y0, int x1, int y1, Rgb color) {
  x0 = std::max(x0, 0);
  y0 = std::max(y0, 0);
  x1 = std::min(x1, image.width() - 1);
  y1 = std::min(y1, image.height() - 1);
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) image.set(x, y, color);
}

namespace {

double distance_to_segment(double px, double py, double x0, double y0, double x1,
                           double y1) {
  const double dx = x1 - x0, dy = y1 - y0;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(((px - x0) * dx + (py - y0) * dy) / len2, 0.0, 1.0);
  const double cx = x0 + t * dx, cy = y0 + t * dy;
  return std::hypot(px - cx, py - cy);
}

}  // namespace

void draw_line(Image& image, double x0, double y0, double x1, double y1,
               double width, Rgb color) {
  const double half = std::max(width, 1.0) / 2.0;
  const int min_x = std::max(0, int(std::floor(std::min(x0, x1) - half - 1.0)));
  const int max_x = std::min(image.width() - 1, int(std::ceil(std::max(x0, x1) + half + 1.0)));
  const int min_y = std::max(0, int(std::floor(std::min(y0, y1) - half - 1.0)));
  const int max_y = std::min(image.height() - 1, int(std::ceil(std::max(y0, y1) + half + 1.0)));
  for (int y = min_y; y <= max_y; ++y) {
    for (int x = min_x; x <= max_x; ++x) {
      const double d = distance_to_segment(double(x), double(y), x0, y0, x1, y1);
      const double coverage = std::clamp(half + 0.5 - d, 0.0, 1.0);
      if (coverage > 0.0) image.blend(x, y, color, coverage);
    }
  }
}

void fill_circle(Image& image, int cx, int cy, int r, Rgb color) {
  for (int dy = -r; dy <= r; ++dy)
    for (int dx = -r; dx <= r; ++dx)
      if (dx * dx + dy * dy <= r * r) image.set(cx + dx, cy + dy, color);
}

void fill_marker(Image& image, PixelPoint center, MarkerShape shape, int size,
                 Rgb color) {
  const int r = std::max(1, size);
  switch (shape) {
    case MarkerShape::kCircle:
      fill_circle(image, center.x, center.y, r, color);
      break;
    case MarkerShape::kSquare: {
      // Half-width trimmed so the square stays inside the radius-r disc.
      const int h = std::max(1, int(std::floor(double(r) / 1.4142135623730951)));
      fill_rect(image, center.x - h, center.y - h, center.x + h, center.y + h, color);
      break;
    }
    case MarkerShape::kDiamond:
      for (int dy = -r; dy <= r; ++dy)
        for (int dx = -r; dx <= r; ++dx)
          if (std::abs(dx) + std::abs(dy) <= r)
            image.set(center.x + dx, center.y + dy, color);
      break;
    case MarkerShape::kTriangle:
      // Downward-pointing; rows within the disc, width shrinking with depth.
      for (int dy = -r; dy <= r; ++dy) {
        const int w = (r - dy) / 2;
        if (w < 0) continue;
        const int wc = std::min(w, int(std::floor(std::sqrt(double(r * r - dy * dy)))));
        for (int dx = -wc; dx <= wc; ++dx) image.set(center.x + dx, center.y + dy, color);
      }
      break;
  }
}

}  // namespace vsrchart

#include "render/chart_renderer.hpp"

namespace vsrchart {

Image overlay_markers(const Image& image, std::span<const PixelPoint> points,
                      int* clipped) {
  Image out = image;
  int clip_count = 0;
  constexpr int r = kMarkerRadius;
  constexpr int outer = kMarkerRadius + kMarkerOutline;
  for (const auto& p : points) {
    if (!image.in_bounds(p.x, p.y)) {
      ++clip_count;
      continue;
    }
    for (int dy = -outer; dy <= outer; ++dy) {
      for (int dx = -outer; dx <= outer; ++dx) {
        const int d2 = dx * dx + dy * dy;
        if (d2 <= r * r)
          out.set(p.x + dx, p.y + dy, kMarkerColor);
        else if (d2 <= outer * outer)
          out.set(p.x + dx, p.y + dy, kMarkerOutlineColor);
      }
    }
  }
  if (clipped) *clipped = clip_count;
  return out;
}

}  // namespace vsrchart

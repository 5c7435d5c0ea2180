#include "render/image.hpp"

#include <cmath>
#include <sstream>

namespace vsrchart {

Image::Image(int width, int height, Rgb fill) : width_(width), height_(height) {
  if (width <= 0 || height <= 0)
    throw UsageError("image dimensions must be positive");
  data_.resize(std::size_t(width) * std::size_t(height) * 3);
  for (std::size_t i = 0; i < data_.size(); i += 3) {
    data_[i] = fill.r;
    data_[i + 1] = fill.g;
    data_[i + 2] = fill.b;
  }
}

void Image::blend(int x, int y, Rgb c, double alpha) {
  if (!in_bounds(x, y)) return;
  if (alpha >= 1.0) {
    set(x, y, c);
    return;
  }
  if (alpha <= 0.0) return;
  const std::size_t i = index(x, y);
  auto mix = [alpha](std::uint8_t dst, std::uint8_t src) {
    return static_cast<std::uint8_t>(
        std::lround(double(dst) * (1.0 - alpha) + double(src) * alpha));
  };
  data_[i] = mix(data_[i], c.r);
  data_[i + 1] = mix(data_[i + 1], c.g);
  data_[i + 2] = mix(data_[i + 2], c.b);
}

Rgb probe(const Image& image, PixelPoint px) {
  if (!image.in_bounds(px.x, px.y)) {
    std::ostringstream msg;
    msg << "probe at (" << px.x << ", " << px.y << ") outside " << image.width()
        << "x" << image.height() << " raster";
    throw OutOfRangeError(msg.str());
  }
  return image.get(px.x, px.y);
}

}  // namespace vsrchart

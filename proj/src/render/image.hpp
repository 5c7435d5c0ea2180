#pragma once

#include <cstdint>
#include <vector>

#include "core/types.hpp"

namespace vsrchart {

// 8-bit RGB raster, row-major.
class Image {
 public:
  Image() = default;
  Image(int width, int height, Rgb fill = Rgb{255, 255, 255});

  int width() const { return width_; }
  int height() const { return height_; }
  bool in_bounds(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_;
  }

  Rgb get(int x, int y) const {
    const std::size_t i = index(x, y);
    return Rgb{data_[i], data_[i + 1], data_[i + 2]};
  }

  void set(int x, int y, Rgb c) {
    if (!in_bounds(x, y)) return;
    const std::size_t i = index(x, y);
    data_[i] = c.r;
    data_[i + 1] = c.g;
    data_[i + 2] = c.b;
  }

  // Source-over blend with the given coverage in [0, 1].
  void blend(int x, int y, Rgb c, double alpha);

  const std::vector<std::uint8_t>& data() const { return data_; }
  std::vector<std::uint8_t>& data() { return data_; }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t index(int x, int y) const {
    return (std::size_t(y) * std::size_t(width_) + std::size_t(x)) * 3;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

// Exact stored color; throws OutOfRangeError when px is outside the raster.
Rgb probe(const Image& image, PixelPoint px);

}  // namespace vsrchart

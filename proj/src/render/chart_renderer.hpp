#pragma once

#include <span>

#include "render/style.hpp"

namespace vsrchart {

// Rasterizes a chart spec and emits the pixel-accurate annotation in the
// same pass. Deterministic for identical inputs. Throws LayoutError when
// text cannot fit at the requested font scale (callers may retry with a
// different style) and ConfigError for invalid specs.
RenderedChart rasterize(const ChartSpec& spec, const StyleConfig& style, int width,
                        int height, const std::string& chart_id = "chart");

// Feedback markers: filled gold circle (radius 6, RGB 255,215,0) with a
// 1 px black outline, no anti-aliasing. Returns a new raster; points whose
// centre is outside the image are skipped and counted in *clipped.
Image overlay_markers(const Image& image, std::span<const PixelPoint> points,
                      int* clipped = nullptr);

inline constexpr int kMarkerRadius = 6;
inline constexpr int kMarkerOutline = 1;
inline constexpr Rgb kMarkerColor{255, 215, 0};
inline constexpr Rgb kMarkerOutlineColor{0, 0, 0};

// Resizes so the longer side equals `target` (default 1036, must be a
// multiple of 28), preserving aspect; anchors and calibration are rescaled
// by the same factor and re-rounded. Bilinear resampling. A chart already
// at the target size is returned unchanged.
RenderedChart resize_longest(const RenderedChart& chart, int target = 1036);

}  // namespace vsrchart

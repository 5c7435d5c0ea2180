#pragma once

#include "render/image.hpp"

namespace vsrchart {

enum class MarkerShape { kCircle, kSquare, kTriangle, kDiamond };

MarkerShape marker_shape_from_name(const std::string& name);
const char* marker_shape_name(MarkerShape shape);

void fill_rect(Image& image, int x0, int y0, int x1, int y1, Rgb color);

// Anti-aliased stroke from (x0,y0) to (x1,y1) with the given width;
// coverage is computed from the distance to the segment.
void draw_line(Image& image, double x0, double y0, double x1, double y1,
               double width, Rgb color);

// Solid circle (no anti-aliasing): pixels with dx^2 + dy^2 <= r^2.
void fill_circle(Image& image, int cx, int cy, int r, Rgb color);

// Solid data-point marker. `size` is the nominal radius; every shape is
// constrained to the Euclidean disc of that radius so the 3 px occlusion
// rule covers any overdraw of a neighbouring anchor's centre.
void fill_marker(Image& image, PixelPoint center, MarkerShape shape, int size, Rgb color);

}  // namespace vsrchart

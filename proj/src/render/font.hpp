#pragma once

#include <string_view>

#include "render/image.hpp"

namespace vsrchart {

// Built-in 5x7 bitmap font, scaled by integer factors. Covers ASCII letters,
// digits and the punctuation the generator emits; anything else renders as a
// hollow box. No anti-aliasing, so text extents are exact.

inline constexpr int kGlyphWidth = 5;
inline constexpr int kGlyphHeight = 7;
inline constexpr int kGlyphAdvance = 6;  // glyph + 1 column gap

int text_width(std::string_view text, int scale);
int text_height(int scale);

void draw_text(Image& image, int x, int y, std::string_view text, Rgb color, int scale);

// Exposed for glyph-level tests.
bool glyph_pixel(char c, int row, int col);

}  // namespace vsrchart

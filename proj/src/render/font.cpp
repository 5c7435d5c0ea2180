#include "render/font.hpp"

#include <array>
#include <cstring>

namespace vsrchart {

namespace {

struct Glyph {
  char c;
  const char* rows[7];
};

// clang-format off
constexpr Glyph kGlyphs[] = {
  {'A', {" ### ",
         "#   #",
         "#   #",
         "#####",
         "#   #",
         "#   #",
         "#   #"}},
  {'B', {"#### ",
         "#   #",
         "#   #",
         "#### ",
         "#   #",
         "#   #",
         "#### "}},
  {'C', {" ### ",
         "#   #",
         "#    ",
         "#    ",
         "#    ",
         "#   #",
         " ### "}},
  {'D', {"#### ",
         "#   #",
         "#   #",
         "#   #",
         "#   #",
         "#   #",
         "#### "}},
  {'E', {"#####",
         "#    ",
         "#    ",
         "#### ",
         "#    ",
         "#    ",
         "#####"}},
  {'F', {"#####",
         "#    ",
         "#    ",
         "#### ",
         "#    ",
         "#    ",
         "#    "}},
  {'G', {" ### ",
         "#   #",
         "#    ",
         "# ###",
         "#   #",
         "#   #",
         " ### "}},
  {'H', {"#   #",
         "#   #",
         "#   #",
         "#####",
         "#   #",
         "#   #",
         "#   #"}},
  {'I', {" ### ",
         "  #  ",
         "  #  ",
         "  #  ",
         "  #  ",
         "  #  ",
         " ### "}},
  {'J', {"  ###",
         "   # ",
         "   # ",
         "   # ",
         "   # ",
         "#  # ",
         " ##  "}},
  {'K', {"#   #",
         "#  # ",
         "# #  ",
         "##   ",
         "# #  ",
         "#  # ",
         "#   #"}},
  {'L', {"#    ",
         "#    ",
         "#    ",
         "#    ",
         "#    ",
         "#    ",
         "#####"}},
  {'M', {"#   #",
         "## ##",
         "# # #",
         "# # #",
         "#   #",
         "#   #",
         "#   #"}},
  {'N', {"#   #",
         "##  #",
         "# # #",
         "#  ##",
         "#   #",
         "#   #",
         "#   #"}},
  {'O', {" ### ",
         "#   #",
         "#   #",
         "#   #",
         "#   #",
         "#   #",
         " ### "}},
  {'P', {"#### ",
         "#   #",
         "#   #",
         "#### ",
         "#    ",
         "#    ",
         "#    "}},
  {'Q', {" ### ",
         "#   #",
         "#   #",
         "#   #",
         "# # #",
         "#  # ",
         " ## #"}},
  {'R', {"#### ",
         "#   #",
         "#   #",
         "#### ",
         "# #  ",
         "#  # ",
         "#   #"}},
  {'S', {" ####",
         "#    ",
         "#    ",
         " ### ",
         "    #",
         "    #",
         "#### "}},
  {'T', {"#####",
         "  #  ",
         "  #  ",
         "  #  ",
         "  #  ",
         "  #  ",
         "  #  "}},
  {'U', {"#   #",
         "#   #",
         "#   #",
         "#   #",
         "#   #",
         "#   #",
         " ### "}},
  {'V', {"#   #",
         "#   #",
         "#   #",
         "#   #",
         "#   #",
         " # # ",
         "  #  "}},
  {'W', {"#   #",
         "#   #",
         "#   #",
         "# # #",
         "# # #",
         "## ##",
         "#   #"}},
  {'X', {"#   #",
         "#   #",
         " # # ",
         "  #  ",
         " # # ",
         "#   #",
         "#   #"}},
  {'Y', {"#   #",
         "#   #",
         " # # ",
         "  #  ",
         "  #  ",
         "  #  ",
         "  #  "}},
  {'Z', {"#####",
         "    #",
         "   # ",
         "  #  ",
         " #   ",
         "#    ",
         "#####"}},
  {'a', {"     ",
         "     ",
         " ### ",
         "    #",
         " ####",
         "#   #",
         " ####"}},
  {'b', {"#    ",
         "#    ",
         "#### ",
         "#   #",
         "#   #",
         "#   #",
         "#### "}},
  {'c', {"     ",
         "     ",
         " ### ",
         "#    ",
         "#    ",
         "#    ",
         " ### "}},
  {'d', {"    #",
         "    #",
         " ####",
         "#   #",
         "#   #",
         "#   #",
         " ####"}},
  {'e', {"     ",
         "     ",
         " ### ",
         "#   #",
         "#####",
         "#    ",
         " ### "}},
  {'f', {"  ## ",
         " #   ",
         "#### ",
         " #   ",
         " #   ",
         " #   ",
         " #   "}},
  {'g', {"     ",
         " ####",
         "#   #",
         "#   #",
         " ####",
         "    #",
         " ### "}},
  {'h', {"#    ",
         "#    ",
         "#### ",
         "#   #",
         "#   #",
         "#   #",
         "#   #"}},
  {'i', {"  #  ",
         "     ",
         " ##  ",
         "  #  ",
         "  #  ",
         "  #  ",
         " ### "}},
  {'j', {"   # ",
         "     ",
         "  ## ",
         "   # ",
         "   # ",
         "#  # ",
         " ##  "}},
  {'k', {"#    ",
         "#    ",
         "#  # ",
         "# #  ",
         "##   ",
         "# #  ",
         "#  # "}},
  {'l', {" ##  ",
         "  #  ",
         "  #  ",
         "  #  ",
         "  #  ",
         "  #  ",
         " ### "}},
  {'m', {"     ",
         "     ",
         "## # ",
         "# # #",
         "# # #",
         "# # #",
         "# # #"}},
  {'n', {"     ",
         "     ",
         "#### ",
         "#   #",
         "#   #",
         "#   #",
         "#   #"}},
  {'o', {"     ",
         "     ",
         " ### ",
         "#   #",
         "#   #",
         "#   #",
         " ### "}},
  {'p', {"     ",
         "#### ",
         "#   #",
         "#   #",
         "#### ",
         "#    ",
         "#    "}},
  {'q', {"     ",
         " ####",
         "#   #",
         "#   #",
         " ####",
         "    #",
         "    #"}},
  {'r', {"     ",
         "     ",
         "# ## ",
         "##   ",
         "#    ",
         "#    ",
         "#    "}},
  {'s', {"     ",
         "     ",
         " ####",
         "#    ",
         " ### ",
         "    #",
         "#### "}},
  {'t', {" #   ",
         " #   ",
         "#### ",
         " #   ",
         " #   ",
         " #  #",
         "  ## "}},
  {'u', {"     ",
         "     ",
         "#   #",
         "#   #",
         "#   #",
         "#   #",
         " ####"}},
  {'v', {"     ",
         "     ",
         "#   #",
         "#   #",
         "#   #",
         " # # ",
         "  #  "}},
  {'w', {"     ",
         "     ",
         "#   #",
         "#   #",
         "# # #",
         "# # #",
         " # # "}},
  {'x', {"     ",
         "     ",
         "#   #",
         " # # ",
         "  #  ",
         " # # ",
         "#   #"}},
  {'y', {"     ",
         "#   #",
         "#   #",
         " # # ",
         "  #  ",
         " #   ",
         "#    "}},
  {'z', {"     ",
         "     ",
         "#####",
         "   # ",
         "  #  ",
         " #   ",
         "#####"}},
  {'0', {" ### ",
         "#   #",
         "#  ##",
         "# # #",
         "##  #",
         "#   #",
         " ### "}},
  {'1', {"  #  ",
         " ##  ",
         "  #  ",
         "  #  ",
         "  #  ",
         "  #  ",
         " ### "}},
  {'2', {" ### ",
         "#   #",
         "    #",
         "   # ",
         "  #  ",
         " #   ",
         "#####"}},
  {'3', {" ### ",
         "#   #",
         "    #",
         "  ## ",
         "    #",
         "#   #",
         " ### "}},
  {'4', {"   # ",
         "  ## ",
         " # # ",
         "#  # ",
         "#####",
         "   # ",
         "   # "}},
  {'5', {"#####",
         "#    ",
         "#### ",
         "    #",
         "    #",
         "#   #",
         " ### "}},
  {'6', {" ### ",
         "#    ",
         "#    ",
         "#### ",
         "#   #",
         "#   #",
         " ### "}},
  {'7', {"#####",
         "    #",
         "   # ",
         "  #  ",
         "  #  ",
         "  #  ",
         "  #  "}},
  {'8', {" ### ",
         "#   #",
         "#   #",
         " ### ",
         "#   #",
         "#   #",
         " ### "}},
  {'9', {" ### ",
         "#   #",
         "#   #",
         " ####",
         "    #",
         "    #",
         " ### "}},
  {' ', {"     ",
         "     ",
         "     ",
         "     ",
         "     ",
         "     ",
         "     "}},
  {'.', {"     ",
         "     ",
         "     ",
         "     ",
         "     ",
         " ##  ",
         " ##  "}},
  {',', {"     ",
         "     ",
         "     ",
         "     ",
         " ##  ",
         "  #  ",
         " #   "}},
  {'-', {"     ",
         "     ",
         "     ",
         "#####",
         "     ",
         "     ",
         "     "}},
  {'+', {"     ",
         "  #  ",
         "  #  ",
         "#####",
         "  #  ",
         "  #  ",
         "     "}},
  {'(', {"   # ",
         "  #  ",
         " #   ",
         " #   ",
         " #   ",
         "  #  ",
         "   # "}},
  {')', {" #   ",
         "  #  ",
         "   # ",
         "   # ",
         "   # ",
         "  #  ",
         " #   "}},
  {'%', {"##  #",
         "##  #",
         "   # ",
         "  #  ",
         " #   ",
         "#  ##",
         "#  ##"}},
  {'/', {"    #",
         "    #",
         "   # ",
         "  #  ",
         " #   ",
         "#    ",
         "#    "}},
  {':', {"     ",
         " ##  ",
         " ##  ",
         "     ",
         " ##  ",
         " ##  ",
         "     "}},
  {'\'', {"  #  ",
          "  #  ",
          "     ",
          "     ",
          "     ",
          "     ",
          "     "}},
  {'_', {"     ",
         "     ",
         "     ",
         "     ",
         "     ",
         "     ",
         "#####"}},
  {'&', {" ##  ",
         "#  # ",
         "# #  ",
         " #   ",
         "# # #",
         "#  # ",
         " ## #"}},
};

constexpr const char* kBoxGlyph[7] = {
  "#####",
  "#   #",
  "#   #",
  "#   #",
  "#   #",
  "#   #",
  "#####",
};
// clang-format on

const char* const* rows_for(char c) {
  for (const auto& g : kGlyphs)
    if (g.c == c) return g.rows;
  return kBoxGlyph;
}

}  // namespace

int text_width(std::string_view text, int scale) {
  if (text.empty()) return 0;
  return (static_cast<int>(text.size()) * kGlyphAdvance - 1) * scale;
}

int text_height(int scale) { return kGlyphHeight * scale; }

bool glyph_pixel(char c, int row, int col) {
  if (row < 0 || row >= kGlyphHeight || col < 0 || col >= kGlyphWidth) return false;
  return rows_for(c)[row][col] == '#';
}

void draw_text(Image& image, int x, int y, std::string_view text, Rgb color, int scale) {
  if (scale < 1) scale = 1;
  int pen_x = x;
  for (char c : text) {
    const char* const* rows = rows_for(c);
    for (int row = 0; row < kGlyphHeight; ++row) {
      for (int col = 0; col < kGlyphWidth; ++col) {
        if (rows[row][col] != '#') continue;
        for (int dy = 0; dy < scale; ++dy)
          for (int dx = 0; dx < scale; ++dx)
            image.set(pen_x + col * scale + dx, y + row * scale + dy, color);
      }
    }
    pen_x += kGlyphAdvance * scale;
  }
}

}  // namespace vsrchart

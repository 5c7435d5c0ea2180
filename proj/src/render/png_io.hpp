#pragma once

#include <string>

#include "render/image.hpp"

namespace vsrchart {

// 8-bit RGB PNG with fixed encoder settings; identical images produce
// identical bytes. No ancillary chunks (no timestamps).
std::string encode_png(const Image& image);
Image decode_png(const std::string& bytes);

void write_png(const std::string& path, const Image& image);
Image read_png(const std::string& path);

}  // namespace vsrchart

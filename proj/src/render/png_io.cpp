#include "render/png_io.hpp"

#include <png.h>

#include <csetjmp>
#include <cstring>
#include <vector>

#include "common/fs_util.hpp"

namespace vsrchart {

namespace {

struct ReadState {
  const std::string* bytes;
  std::size_t offset;
};

void read_callback(png_structp png, png_bytep out, png_size_t count) {
  auto* state = static_cast<ReadState*>(png_get_io_ptr(png));
  if (state->offset + count > state->bytes->size())
    png_error(png, "unexpected end of PNG stream");
  std::memcpy(out, state->bytes->data() + state->offset, count);
  state->offset += count;
}

void write_callback(png_structp png, png_bytep data, png_size_t count) {
  auto* out = static_cast<std::string*>(png_get_io_ptr(png));
  out->append(reinterpret_cast<const char*>(data), count);
}

void flush_callback(png_structp) {}

}  // namespace

std::string encode_png(const Image& image) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  std::string out;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("PNG encode failed");
  }
  png_set_write_fn(png, &out, write_callback, flush_callback);
  png_set_compression_level(png, 6);
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width()),
               static_cast<png_uint_32>(image.height()), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  const std::size_t stride = std::size_t(image.width()) * 3;
  std::vector<png_bytep> rows(static_cast<std::size_t>(image.height()));
  const auto* base = image.data().data();
  for (int y = 0; y < image.height(); ++y)
    rows[static_cast<std::size_t>(y)] =
        const_cast<png_bytep>(base + std::size_t(y) * stride);
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

Image decode_png(const std::string& bytes) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("PNG decode failed");
  }
  ReadState state{&bytes, 0};
  png_set_read_fn(png, &state, read_callback);
  png_read_info(png, info);

  png_set_expand(png);
  png_set_strip_16(png);
  png_set_strip_alpha(png);
  png_set_gray_to_rgb(png);
  png_read_update_info(png, info);

  const int width = static_cast<int>(png_get_image_width(png, info));
  const int height = static_cast<int>(png_get_image_height(png, info));
  if (png_get_channels(png, info) != 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("PNG decode: expected 3 channels after expansion");
  }

  Image image(width, height);
  const std::size_t stride = std::size_t(width) * 3;
  std::vector<png_bytep> rows(static_cast<std::size_t>(height));
  auto* base = image.data().data();
  for (int y = 0; y < height; ++y)
    rows[static_cast<std::size_t>(y)] = base + std::size_t(y) * stride;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return image;
}

void write_png(const std::string& path, const Image& image) {
  atomic_write_file(path, encode_png(image));
}

Image read_png(const std::string& path) { return decode_png(read_file(path)); }

}  // namespace vsrchart

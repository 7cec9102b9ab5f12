#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "plforest/image.hpp"

namespace plforest::detail {

ImageRgb8 read_png_rgb8(const std::filesystem::path& path);

struct Gray16 {
  int width = 0;
  int height = 0;
  std::vector<std::uint16_t> values;  // row-major
};

Gray16 read_png_gray16(const std::filesystem::path& path);

void write_png_rgb8(const std::filesystem::path& path, const ImageRgb8& image);
void write_png_gray16(const std::filesystem::path& path, const Gray16& image);

}  // namespace plforest::detail

#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "plforest/errors.hpp"

namespace plforest {

// Dense row-major image with an arbitrary (small) channel count.
template <typename T>
class Image {
 public:
  Image() = default;
  Image(int width, int height, int channels, T fill = T{})
      : width_(width),
        height_(height),
        channels_(channels),
        data_(static_cast<std::size_t>(width) * height * channels, fill) {
    assert(width >= 0 && height >= 0 && channels > 0);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  int channels() const { return channels_; }
  bool empty() const { return data_.empty(); }

  bool contains(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  T& at(int x, int y, int c = 0) {
    assert(contains(x, y) && c < channels_);
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }
  const T& at(int x, int y, int c = 0) const {
    assert(contains(x, y) && c < channels_);
    return data_[(static_cast<std::size_t>(y) * width_ + x) * channels_ + c];
  }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  bool operator==(const Image& other) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  int channels_ = 1;
  std::vector<T> data_;
};

using ImageRgb8 = Image<std::uint8_t>;  // 3 interleaved channels
using ImageF32 = Image<float>;          // single channel

// Invalid-depth sentinel carried inside depth images.
inline constexpr float kInvalidDepth = std::numeric_limits<float>::quiet_NaN();

inline bool depth_valid(float d) { return std::isfinite(d) && d > 0.0f; }

// Grayscale (r + g + b) / 3 as float.
ImageF32 to_gray(const ImageRgb8& rgb);

// Bilinear resample to the target size; pixel centers aligned.
ImageRgb8 resample_bilinear(const ImageRgb8& src, int width, int height);

}  // namespace plforest

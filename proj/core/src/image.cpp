#include "plforest/image.hpp"

#include <algorithm>

namespace plforest {

ImageF32 to_gray(const ImageRgb8& rgb) {
  ImageF32 gray(rgb.width(), rgb.height(), 1);
  for (int y = 0; y < rgb.height(); ++y) {
    for (int x = 0; x < rgb.width(); ++x) {
      gray.at(x, y) =
          (static_cast<float>(rgb.at(x, y, 0)) + rgb.at(x, y, 1) +
           rgb.at(x, y, 2)) /
          3.0f;
    }
  }
  return gray;
}

ImageRgb8 resample_bilinear(const ImageRgb8& src, int width, int height) {
  if (src.width() == width && src.height() == height) {
    return src;
  }
  ImageRgb8 dst(width, height, src.channels());
  const double sx = static_cast<double>(src.width()) / width;
  const double sy = static_cast<double>(src.height()) / height;
  for (int y = 0; y < height; ++y) {
    const double v = (y + 0.5) * sy - 0.5;
    const double vc = std::clamp(v, 0.0, static_cast<double>(src.height() - 1));
    const int y0 = static_cast<int>(vc);
    const int y1 = std::min(y0 + 1, src.height() - 1);
    const double fy = vc - y0;
    for (int x = 0; x < width; ++x) {
      const double u = (x + 0.5) * sx - 0.5;
      const double uc =
          std::clamp(u, 0.0, static_cast<double>(src.width() - 1));
      const int x0 = static_cast<int>(uc);
      const int x1 = std::min(x0 + 1, src.width() - 1);
      const double fx = uc - x0;
      for (int c = 0; c < src.channels(); ++c) {
        const double top = (1.0 - fx) * src.at(x0, y0, c) + fx * src.at(x1, y0, c);
        const double bot = (1.0 - fx) * src.at(x0, y1, c) + fx * src.at(x1, y1, c);
        const double value = (1.0 - fy) * top + fy * bot;
        dst.at(x, y, c) = static_cast<std::uint8_t>(std::lround(
            std::clamp(value, 0.0, 255.0)));
      }
    }
  }
  return dst;
}

}  // namespace plforest

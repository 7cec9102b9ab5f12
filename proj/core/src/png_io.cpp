#include "png_io.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "plforest/errors.hpp"

namespace plforest::detail {

ImageRgb8 read_png_rgb8(const std::filesystem::path& path) {
  cv::Mat bgr = cv::imread(path.string(), cv::IMREAD_COLOR);
  if (bgr.empty()) {
    throw IoError("cannot read image: " + path.string());
  }
  ImageRgb8 out(bgr.cols, bgr.rows, 3);
  for (int y = 0; y < bgr.rows; ++y) {
    const cv::Vec3b* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < bgr.cols; ++x) {
      out.at(x, y, 0) = row[x][2];
      out.at(x, y, 1) = row[x][1];
      out.at(x, y, 2) = row[x][0];
    }
  }
  return out;
}

Gray16 read_png_gray16(const std::filesystem::path& path) {
  cv::Mat raw = cv::imread(path.string(), cv::IMREAD_UNCHANGED);
  if (raw.empty()) {
    throw IoError("cannot read image: " + path.string());
  }
  if (raw.type() != CV_16UC1) {
    throw FormatError("expected 16-bit single-channel PNG: " + path.string());
  }
  Gray16 out;
  out.width = raw.cols;
  out.height = raw.rows;
  out.values.resize(static_cast<std::size_t>(raw.cols) * raw.rows);
  for (int y = 0; y < raw.rows; ++y) {
    const std::uint16_t* row = raw.ptr<std::uint16_t>(y);
    std::copy(row, row + raw.cols,
              out.values.begin() + static_cast<std::size_t>(y) * raw.cols);
  }
  return out;
}

void write_png_rgb8(const std::filesystem::path& path, const ImageRgb8& image) {
  cv::Mat bgr(image.height(), image.width(), CV_8UC3);
  for (int y = 0; y < image.height(); ++y) {
    cv::Vec3b* row = bgr.ptr<cv::Vec3b>(y);
    for (int x = 0; x < image.width(); ++x) {
      row[x][0] = image.at(x, y, 2);
      row[x][1] = image.at(x, y, 1);
      row[x][2] = image.at(x, y, 0);
    }
  }
  if (!cv::imwrite(path.string(), bgr)) {
    throw IoError("cannot write image: " + path.string());
  }
}

void write_png_gray16(const std::filesystem::path& path, const Gray16& image) {
  cv::Mat raw(image.height, image.width, CV_16UC1);
  for (int y = 0; y < image.height; ++y) {
    std::uint16_t* row = raw.ptr<std::uint16_t>(y);
    std::copy(image.values.begin() + static_cast<std::size_t>(y) * image.width,
              image.values.begin() +
                  static_cast<std::size_t>(y + 1) * image.width,
              row);
  }
  if (!cv::imwrite(path.string(), raw)) {
    throw IoError("cannot write image: " + path.string());
  }
}

}  // namespace plforest::detail

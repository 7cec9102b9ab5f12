#include "plforest/dataset.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "png_io.hpp"

namespace plforest {

namespace {

constexpr double kTumDepthScale = 5000.0;  // raw units per meter
constexpr double kMaxDepthMeters = 20.0;

struct StampedPath {
  double timestamp = 0.0;
  std::filesystem::path path;
};

struct StampedPose {
  double timestamp = 0.0;
  RigidTransform pose;
};

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw FormatError("missing index file: " + path.string());
  }
  return in;
}

std::vector<StampedPath> read_index(const std::filesystem::path& dir,
                                    const std::string& name) {
  auto in = open_or_throw(dir / name);
  std::vector<StampedPath> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    StampedPath entry;
    std::string file;
    if (!(ss >> entry.timestamp >> file)) {
      throw FormatError("malformed line in " + name + ": " + line);
    }
    entry.path = dir / file;
    out.push_back(std::move(entry));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.timestamp < b.timestamp; });
  return out;
}

std::vector<StampedPose> read_groundtruth(const std::filesystem::path& dir) {
  auto in = open_or_throw(dir / "groundtruth.txt");
  std::vector<StampedPose> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    double t, tx, ty, tz, qx, qy, qz, qw;
    if (!(ss >> t >> tx >> ty >> tz >> qx >> qy >> qz >> qw)) {
      throw FormatError("malformed groundtruth line: " + line);
    }
    Eigen::Quaterniond q(qw, qx, qy, qz);
    if (q.norm() <= 0.0) {
      throw FormatError("zero quaternion in groundtruth line: " + line);
    }
    q.normalize();
    out.push_back({t, RigidTransform(q.toRotationMatrix(), Vec3(tx, ty, tz))});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.timestamp < b.timestamp; });
  return out;
}

// Index of the element with timestamp closest to t, or -1 when outside gap.
template <typename T>
int nearest_within(const std::vector<T>& items, double t, double gap) {
  if (items.empty()) return -1;
  auto it = std::lower_bound(
      items.begin(), items.end(), t,
      [](const T& a, double value) { return a.timestamp < value; });
  int best = -1;
  double best_diff = gap;
  for (auto cand : {it, it == items.begin() ? it : std::prev(it)}) {
    if (cand == items.end()) continue;
    const double diff = std::abs(cand->timestamp - t);
    if (diff <= best_diff) {
      best_diff = diff;
      best = static_cast<int>(cand - items.begin());
    }
  }
  return best;
}

ImageF32 decode_depth(const detail::Gray16& raw, double units_per_meter,
                      std::uint16_t invalid_value) {
  ImageF32 depth(raw.width, raw.height, 1, kInvalidDepth);
  for (int y = 0; y < raw.height; ++y) {
    for (int x = 0; x < raw.width; ++x) {
      const std::uint16_t value =
          raw.values[static_cast<std::size_t>(y) * raw.width + x];
      if (value == 0 || value == invalid_value) continue;
      const double meters = value / units_per_meter;
      if (meters > kMaxDepthMeters) continue;
      depth.at(x, y) = static_cast<float>(meters);
    }
  }
  return depth;
}

void check_depth_resolution(const ImageF32& depth,
                            const CameraIntrinsics& intrinsics,
                            const std::string& what) {
  if (depth.width() != intrinsics.width ||
      depth.height() != intrinsics.height) {
    throw FormatError(what + ": depth resolution " +
                      std::to_string(depth.width()) + "x" +
                      std::to_string(depth.height()) +
                      " does not match intrinsics");
  }
}

}  // namespace

std::vector<RgbdFrame> load_tum_sequence(const std::filesystem::path& dir,
                                         const CameraIntrinsics& intrinsics,
                                         double max_gap_s, LoadReport* report) {
  intrinsics.validate();
  const auto rgb_index = read_index(dir, "rgb.txt");
  const auto depth_index = read_index(dir, "depth.txt");
  const auto poses = read_groundtruth(dir);

  std::vector<RgbdFrame> frames;
  LoadReport local;
  for (const auto& rgb_entry : rgb_index) {
    const int di = nearest_within(depth_index, rgb_entry.timestamp, max_gap_s);
    const int pi = nearest_within(poses, rgb_entry.timestamp, max_gap_s);
    if (di < 0 || pi < 0) {
      ++local.skipped_unassociated;
      continue;
    }
    RgbdFrame frame;
    frame.timestamp = rgb_entry.timestamp;
    frame.intrinsics = intrinsics;
    frame.rgb = detail::read_png_rgb8(rgb_entry.path);
    frame.depth = decode_depth(detail::read_png_gray16(depth_index[di].path),
                               kTumDepthScale, 0);
    frame.pose = poses[pi].pose;
    check_depth_resolution(frame.depth, intrinsics, dir.string());
    frames.push_back(resample_rgb_to_depth(std::move(frame)));
    ++local.loaded;
  }
  if (report) *report = local;
  return frames;
}

std::vector<RgbdFrame> load_7scenes_sequence(
    const std::filesystem::path& dir, const CameraIntrinsics& intrinsics) {
  intrinsics.validate();
  std::vector<int> indices;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    int index = -1;
    if (std::sscanf(name.c_str(), "frame-%d.color.png", &index) == 1) {
      indices.push_back(index);
    }
  }
  std::sort(indices.begin(), indices.end());
  if (indices.empty()) {
    throw FormatError("no frame-*.color.png files in " + dir.string());
  }

  std::vector<RgbdFrame> frames;
  frames.reserve(indices.size());
  for (const int index : indices) {
    char stem[32];
    std::snprintf(stem, sizeof(stem), "frame-%06d", index);
    const auto color_path = dir / (std::string(stem) + ".color.png");
    const auto depth_path = dir / (std::string(stem) + ".depth.png");
    const auto pose_path = dir / (std::string(stem) + ".pose.txt");
    if (!std::filesystem::exists(depth_path) ||
        !std::filesystem::exists(pose_path)) {
      throw FormatError("incomplete frame triplet: " + std::string(stem));
    }

    RgbdFrame frame;
    frame.timestamp = static_cast<double>(index);
    frame.intrinsics = intrinsics;
    frame.rgb = detail::read_png_rgb8(color_path);
    frame.depth = decode_depth(detail::read_png_gray16(depth_path), 1000.0,
                               65535);
    check_depth_resolution(frame.depth, intrinsics, dir.string());

    std::ifstream pose_in(pose_path);
    Mat4 m;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        if (!(pose_in >> m(r, c))) {
          throw FormatError("malformed pose file: " + pose_path.string());
        }
      }
    }
    frame.pose = RigidTransform::from_matrix(m);
    frames.push_back(resample_rgb_to_depth(std::move(frame)));
  }
  return frames;
}

void write_7scenes_frame(const std::filesystem::path& dir, int index,
                         const RgbdFrame& frame) {
  std::filesystem::create_directories(dir);
  char stem[32];
  std::snprintf(stem, sizeof(stem), "frame-%06d", index);

  detail::write_png_rgb8(dir / (std::string(stem) + ".color.png"), frame.rgb);

  detail::Gray16 raw;
  raw.width = frame.depth.width();
  raw.height = frame.depth.height();
  raw.values.resize(static_cast<std::size_t>(raw.width) * raw.height, 65535);
  for (int y = 0; y < raw.height; ++y) {
    for (int x = 0; x < raw.width; ++x) {
      const float d = frame.depth.at(x, y);
      if (!depth_valid(d)) continue;
      const long mm = std::lround(d * 1000.0);
      raw.values[static_cast<std::size_t>(y) * raw.width + x] =
          static_cast<std::uint16_t>(std::clamp(mm, 1l, 65534l));
    }
  }
  detail::write_png_gray16(dir / (std::string(stem) + ".depth.png"), raw);

  if (!frame.pose) {
    throw IoError("frame has no pose to write");
  }
  std::ofstream pose_out(dir / (std::string(stem) + ".pose.txt"));
  if (!pose_out) {
    throw IoError("cannot write pose file in " + dir.string());
  }
  pose_out.precision(17);
  const Mat4 m = frame.pose->matrix();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      pose_out << m(r, c) << (c == 3 ? '\n' : ' ');
    }
  }
}

RgbdFrame resample_rgb_to_depth(RgbdFrame frame) {
  if (frame.rgb.width() != frame.depth.width() ||
      frame.rgb.height() != frame.depth.height()) {
    frame.rgb =
        resample_bilinear(frame.rgb, frame.depth.width(), frame.depth.height());
  }
  return frame;
}

}  // namespace plforest

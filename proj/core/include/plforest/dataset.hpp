#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "plforest/geometry.hpp"
#include "plforest/image.hpp"

namespace plforest {

// One posed RGB-D frame. Depth is metric with NaN marking invalid pixels;
// rgb and depth always share the same resolution after loading.
struct RgbdFrame {
  ImageRgb8 rgb;
  ImageF32 depth;
  std::optional<RigidTransform> pose;  // camera to world
  double timestamp = 0.0;
  CameraIntrinsics intrinsics;
};

struct LoadReport {
  int loaded = 0;
  int skipped_unassociated = 0;
};

// TUM layout: rgb.txt / depth.txt / groundtruth.txt index files, 16-bit PNG
// depth at scale 1/5000 m, poses as "timestamp tx ty tz qx qy qz qw".
// rgb/depth/pose triplets are associated by nearest timestamp within
// max_gap_s; frames without a full association are skipped and counted.
std::vector<RgbdFrame> load_tum_sequence(const std::filesystem::path& dir,
                                         const CameraIntrinsics& intrinsics,
                                         double max_gap_s = 0.02,
                                         LoadReport* report = nullptr);

// 7-Scenes layout: frame-%06d.{color.png,depth.png,pose.txt}; depth in
// 16-bit millimeters with 65535 (and 0) invalid; pose.txt a row-major 4x4
// camera-to-world matrix.
std::vector<RgbdFrame> load_7scenes_sequence(
    const std::filesystem::path& dir, const CameraIntrinsics& intrinsics);

// Writes one frame in the 7-Scenes layout. Valid depth is stored as rounded
// millimeters, invalid pixels as 65535.
void write_7scenes_frame(const std::filesystem::path& dir, int index,
                         const RgbdFrame& frame);

// Bilinear resample of rgb down to the depth resolution; depth untouched.
RgbdFrame resample_rgb_to_depth(RgbdFrame frame);

}  // namespace plforest

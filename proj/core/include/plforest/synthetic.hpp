#pragma once

#include <Eigen/Geometry>
#include <array>
#include <cstdint>
#include <vector>

#include "plforest/dataset.hpp"
#include "plforest/geometry.hpp"

namespace plforest {

// Finite 3D rectangle origin + s*edge_u + t*edge_v, s,t in [0,1], carrying a
// procedural texture. Cell colors are a pure hash of (texture_seed, cell), so
// renders are reproducible without asset files.
struct TexturedPatch {
  Vec3 origin = Vec3::Zero();
  Vec3 edge_u = Vec3::UnitX();
  Vec3 edge_v = Vec3::UnitY();
  std::array<std::uint8_t, 3> base_color{200, 200, 200};
  bool textured = true;
  double cell_size = 0.04;  // meters
  std::uint64_t texture_seed = 0;

  Vec3 normal() const { return edge_u.cross(edge_v).normalized(); }
  double area() const { return edge_u.cross(edge_v).norm(); }
};

// Straight colored band lying on a host patch, slightly offset along the
// patch normal so it wins the depth test. Its centerline a-b is the 3D line
// segment the band represents; the band's long boundaries are parallel to it.
struct EdgeBand {
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::UnitX();
  Vec3 lateral = Vec3::UnitY();  // unit, across the band
  double width = 0.02;           // meters
  std::array<std::uint8_t, 3> color{220, 40, 40};

  Vec3 direction() const { return (b - a).normalized(); }
  double length() const { return (b - a).norm(); }
};

struct SyntheticWorld {
  std::vector<TexturedPatch> patches;
  std::vector<EdgeBand> edges;
  Eigen::AlignedBox3d extent;
};

// Desk-scale room (floor, three walls, a desk) with random color-cell
// textures and a handful of colored bands.
SyntheticWorld make_desk_world(std::uint64_t seed);

// Same geometry but every surface shares one uniform color; only the colored
// bands carry image structure.
SyntheticWorld make_low_texture_world(std::uint64_t seed);

// Ray-casts the world into an RGB-D frame at the given camera-to-world pose.
// Pixels that hit nothing get invalid depth; throws EmptyInputError when no
// pixel hits any surface. Deterministic: equal inputs give bit-equal frames.
RgbdFrame render_frame(const SyntheticWorld& world, const RigidTransform& pose,
                       const CameraIntrinsics& intrinsics);

// Distance from a world-space point to the nearest surface (patch or band).
double distance_to_geometry(const SyntheticWorld& world, const Vec3& point);

// Smooth arc of camera-to-world poses that keep the room in view. phase
// shifts the arc so train and test paths interleave.
std::vector<RigidTransform> make_camera_path(const SyntheticWorld& world,
                                             int count, double phase,
                                             std::uint64_t seed);

}  // namespace plforest

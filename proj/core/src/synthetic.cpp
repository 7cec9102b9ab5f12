#include "plforest/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "plforest/rng.hpp"

namespace plforest {

namespace {

constexpr double kBandLift = 1e-4;  // meters off the host surface

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::array<std::uint8_t, 3> cell_color(std::uint64_t seed, long ci, long cj) {
  const std::uint64_t h =
      mix64(seed ^ mix64(static_cast<std::uint64_t>(ci) * 0x100000001b3ull ^
                         static_cast<std::uint64_t>(cj)));
  return {static_cast<std::uint8_t>(40 + (h & 0xff) % 176),
          static_cast<std::uint8_t>(40 + ((h >> 16) & 0xff) % 176),
          static_cast<std::uint8_t>(40 + ((h >> 32) & 0xff) % 176)};
}

// Rectangle as seen by the ray caster; bands are converted to these too.
struct RectView {
  Vec3 origin;
  Vec3 edge_u;
  Vec3 edge_v;
  double inv_uu = 0.0;
  double inv_vv = 0.0;
  Vec3 normal;
  const TexturedPatch* patch = nullptr;  // null for bands
  std::array<std::uint8_t, 3> color{0, 0, 0};
};

RectView make_view(const Vec3& origin, const Vec3& eu, const Vec3& ev) {
  RectView view;
  view.origin = origin;
  view.edge_u = eu;
  view.edge_v = ev;
  view.inv_uu = 1.0 / eu.squaredNorm();
  view.inv_vv = 1.0 / ev.squaredNorm();
  view.normal = eu.cross(ev).normalized();
  return view;
}

std::vector<RectView> collect_rects(const SyntheticWorld& world) {
  std::vector<RectView> rects;
  rects.reserve(world.patches.size() + world.edges.size());
  for (const auto& patch : world.patches) {
    RectView view = make_view(patch.origin, patch.edge_u, patch.edge_v);
    view.patch = &patch;
    view.color = patch.base_color;
    rects.push_back(view);
  }
  for (const auto& band : world.edges) {
    const Vec3 origin = band.a - 0.5 * band.width * band.lateral;
    RectView view =
        make_view(origin, band.b - band.a, band.width * band.lateral);
    view.color = band.color;
    rects.push_back(view);
  }
  return rects;
}

// Ray-rectangle intersection; returns the ray parameter or +inf.
double intersect(const RectView& rect, const Vec3& origin, const Vec3& dir,
                 double* u_out, double* v_out) {
  const double denom = rect.normal.dot(dir);
  if (std::abs(denom) < 1e-12) return std::numeric_limits<double>::infinity();
  const double s = rect.normal.dot(rect.origin - origin) / denom;
  if (s <= 1e-9) return std::numeric_limits<double>::infinity();
  const Vec3 local = origin + s * dir - rect.origin;
  const double u = local.dot(rect.edge_u) * rect.inv_uu;
  const double v = local.dot(rect.edge_v) * rect.inv_vv;
  if (u < 0.0 || u > 1.0 || v < 0.0 || v > 1.0) {
    return std::numeric_limits<double>::infinity();
  }
  *u_out = u;
  *v_out = v;
  return s;
}

std::array<std::uint8_t, 3> shade(const RectView& rect, double u, double v) {
  if (rect.patch == nullptr || !rect.patch->textured) {
    return rect.color;
  }
  const TexturedPatch& patch = *rect.patch;
  const long ci = static_cast<long>(
      std::floor(u * patch.edge_u.norm() / patch.cell_size));
  const long cj = static_cast<long>(
      std::floor(v * patch.edge_v.norm() / patch.cell_size));
  return cell_color(patch.texture_seed, ci, cj);
}

// Room shell shared by both worlds: floor, back wall, two side walls, desk.
std::vector<TexturedPatch> make_room(std::uint64_t seed, bool textured,
                                     std::array<std::uint8_t, 3> base) {
  std::vector<TexturedPatch> patches;
  auto add = [&](const Vec3& origin, const Vec3& eu, const Vec3& ev) {
    TexturedPatch patch;
    patch.origin = origin;
    patch.edge_u = eu;
    patch.edge_v = ev;
    patch.textured = textured;
    patch.base_color = base;
    patch.texture_seed = mix64(seed + patches.size() + 1);
    patches.push_back(patch);
  };
  // floor (normal +z)
  add(Vec3(-2, -2, 0), Vec3(4, 0, 0), Vec3(0, 4, 0));
  // back wall at y=+2 (normal -y)
  add(Vec3(-2, 2, 0), Vec3(0, 0, 2.5), Vec3(4, 0, 0));
  // left wall at x=-2 (normal +x)
  add(Vec3(-2, -2, 0), Vec3(0, 4, 0), Vec3(0, 0, 2.5));
  // right wall at x=+2 (normal -x)
  add(Vec3(2, -2, 0), Vec3(0, 0, 2.5), Vec3(0, 4, 0));
  // desk top (normal +z) and front panel (normal -y)
  add(Vec3(-0.8, 0.8, 0.75), Vec3(1.6, 0, 0), Vec3(0, 0.8, 0));
  add(Vec3(-0.8, 0.8, 0), Vec3(1.6, 0, 0), Vec3(0, 0, 0.75));
  return patches;
}

// Colored band on a host patch, expressed through patch-local coordinates.
EdgeBand band_on_patch(const TexturedPatch& patch, const Vec2& start_uv,
                       const Vec2& dir_uv, double length, double width,
                       std::array<std::uint8_t, 3> color) {
  const Vec3 lifted = kBandLift * patch.normal();
  const Vec3 u_axis = patch.edge_u.normalized();
  const Vec3 v_axis = patch.edge_v.normalized();
  const Vec3 dir = (dir_uv.x() * u_axis + dir_uv.y() * v_axis).normalized();
  EdgeBand band;
  band.a = patch.origin + start_uv.x() * patch.edge_u +
           start_uv.y() * patch.edge_v + lifted;
  band.b = band.a + length * dir;
  band.lateral = patch.normal().cross(dir).normalized();
  band.width = width;
  band.color = color;
  return band;
}

SyntheticWorld finish_world(std::vector<TexturedPatch> patches,
                            std::vector<EdgeBand> edges) {
  SyntheticWorld world;
  world.patches = std::move(patches);
  world.edges = std::move(edges);
  for (const auto& patch : world.patches) {
    world.extent.extend(patch.origin);
    world.extent.extend(patch.origin + patch.edge_u);
    world.extent.extend(patch.origin + patch.edge_v);
    world.extent.extend(patch.origin + patch.edge_u + patch.edge_v);
  }
  return world;
}

std::vector<EdgeBand> make_bands(const std::vector<TexturedPatch>& patches,
                                 std::uint64_t seed, int count) {
  // Strong saturated colors so the bands contrast with any wall texture.
  const std::array<std::array<std::uint8_t, 3>, 6> palette{{{235, 30, 30},
                                                            {30, 200, 30},
                                                            {30, 60, 235},
                                                            {235, 220, 30},
                                                            {30, 215, 215},
                                                            {225, 40, 225}}};
  Rng rng(mix64(seed ^ 0xbadbeef));
  std::vector<EdgeBand> bands;
  for (int i = 0; i < count; ++i) {
    // Skip the desk front panel (index 5) to keep its silhouette clean.
    const auto& patch = patches[rng.index(5)];
    const double len = patch.area() > 8.0 ? rng.uniform(0.8, 1.8)
                                          : rng.uniform(0.4, 0.7);
    const Vec2 start(rng.uniform(0.12, 0.6), rng.uniform(0.12, 0.6));
    const double angle = rng.uniform(0.0, std::numbers::pi);
    const Vec2 dir(std::cos(angle), std::sin(angle));
    bands.push_back(band_on_patch(patch, start, dir, len,
                                  rng.uniform(0.02, 0.05),
                                  palette[rng.index(palette.size())]));
  }
  return bands;
}

}  // namespace

SyntheticWorld make_desk_world(std::uint64_t seed) {
  auto patches = make_room(seed, true, {200, 200, 200});
  auto bands = make_bands(patches, seed, 10);
  return finish_world(std::move(patches), std::move(bands));
}

SyntheticWorld make_low_texture_world(std::uint64_t seed) {
  auto patches = make_room(seed, false, {190, 190, 190});
  auto bands = make_bands(patches, seed, 22);
  return finish_world(std::move(patches), std::move(bands));
}

RgbdFrame render_frame(const SyntheticWorld& world, const RigidTransform& pose,
                       const CameraIntrinsics& intrinsics) {
  intrinsics.validate();
  const auto rects = collect_rects(world);
  RgbdFrame frame;
  frame.intrinsics = intrinsics;
  frame.pose = pose;
  frame.rgb = ImageRgb8(intrinsics.width, intrinsics.height, 3, 12);
  frame.depth =
      ImageF32(intrinsics.width, intrinsics.height, 1, kInvalidDepth);

  const Vec3 center = pose.translation();
  const Mat3& rotation = pose.rotation();
  int hits = 0;
  for (int y = 0; y < intrinsics.height; ++y) {
    for (int x = 0; x < intrinsics.width; ++x) {
      const Vec3 dir_cam((x - intrinsics.cx) / intrinsics.fx,
                         (y - intrinsics.cy) / intrinsics.fy, 1.0);
      const Vec3 dir = rotation * dir_cam;
      double best = std::numeric_limits<double>::infinity();
      const RectView* best_rect = nullptr;
      double bu = 0.0, bv = 0.0;
      for (const auto& rect : rects) {
        double u, v;
        const double s = intersect(rect, center, dir, &u, &v);
        if (s < best) {
          best = s;
          best_rect = &rect;
          bu = u;
          bv = v;
        }
      }
      if (best_rect == nullptr) continue;
      // dir_cam has unit z, so the ray parameter equals the camera-frame z.
      frame.depth.at(x, y) = static_cast<float>(best);
      const auto rgb = shade(*best_rect, bu, bv);
      frame.rgb.at(x, y, 0) = rgb[0];
      frame.rgb.at(x, y, 1) = rgb[1];
      frame.rgb.at(x, y, 2) = rgb[2];
      ++hits;
    }
  }
  if (hits == 0) {
    throw EmptyInputError("camera sees no world geometry");
  }
  return frame;
}

double distance_to_geometry(const SyntheticWorld& world, const Vec3& point) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& rect : collect_rects(world)) {
    const Vec3 local = point - rect.origin;
    const double u =
        std::clamp(local.dot(rect.edge_u) * rect.inv_uu, 0.0, 1.0);
    const double v =
        std::clamp(local.dot(rect.edge_v) * rect.inv_vv, 0.0, 1.0);
    const Vec3 closest = rect.origin + u * rect.edge_u + v * rect.edge_v;
    best = std::min(best, (point - closest).norm());
  }
  return best;
}

std::vector<RigidTransform> make_camera_path(const SyntheticWorld& world,
                                             int count, double phase,
                                             std::uint64_t seed) {
  const Vec3 up = Vec3::UnitZ();
  Rng rng(mix64(seed ^ 0x9aff));
  const double radius_phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double height_phase = rng.uniform(0.0, 2.0 * std::numbers::pi);

  std::vector<RigidTransform> poses;
  poses.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double t = (i + phase) / std::max(1, count);
    const double sweep = std::numbers::pi * 100.0 / 180.0;
    const double angle = -0.5 * sweep + sweep * t;
    const double radius =
        1.9 + 0.3 * std::sin(4.0 * std::numbers::pi * t + radius_phase);
    const double height =
        1.25 + 0.45 * std::sin(2.0 * std::numbers::pi * t + height_phase);
    const Vec3 eye(radius * std::sin(angle), 0.3 - radius * std::cos(angle),
                   height);
    const Vec3 target(0.35 * std::sin(2.0 * std::numbers::pi * t), 0.9,
                      0.9 + 0.25 * std::cos(2.0 * std::numbers::pi * t));

    const Vec3 forward = (target - eye).normalized();
    const Vec3 right = forward.cross(up).normalized();
    const Vec3 down = forward.cross(right).normalized();
    Mat3 rotation;
    rotation.col(0) = right;
    rotation.col(1) = down;
    rotation.col(2) = forward;
    poses.emplace_back(rotation, eye);
  }
  return poses;
}

}  // namespace plforest

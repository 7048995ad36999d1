#pragma once

#include <vector>

#include "eyefit/dual.hpp"
#include "eyefit/errors.hpp"
#include "eyefit/geometry.hpp"

namespace eyefit {

// Points closer than this to the image plane count as behind the camera.
inline constexpr double kMinProjectionDepth = 1e-6;  // mm

// Pinhole intrinsics with equal focal lengths and the principal point fixed
// at the image center.
struct CameraIntrinsics {
  double focal_length = 160.0;  // pixels
  int width = 0;
  int height = 0;

  void validate() const;
};

// Projected cloud; same cardinality and order as the source 3D cloud.
struct PixelCloud {
  std::vector<Vec2> points;
  SemanticTag semantic_tag = SemanticTag::Pupil;
};

namespace detail {

template <class S>
inline Vec2T<S> project_point(const Vec3T<S>& p, const S& focal_length, double center_x,
                              double center_y) {
  return {focal_length * p.x / p.z + center_x, focal_length * p.y / p.z + center_y};
}

}  // namespace detail

// Pinhole projection with perspective division. Throws BehindCamera listing
// the offending indices when any z <= kMinProjectionDepth.
PixelCloud project(const PointCloud& cloud, const CameraIntrinsics& intrinsics);

Vec2 project_eyeball_center(const SharedEyeParams& shared, const CameraIntrinsics& intrinsics);

}  // namespace eyefit

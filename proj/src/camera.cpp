#include "eyefit/camera.hpp"

#include <string>

namespace eyefit {

void CameraIntrinsics::validate() const {
  if (!(focal_length > 0.0)) throw InvalidParameter("focal_length must be positive");
  if (width < 1 || height < 1) throw InvalidParameter("image dimensions must be at least 1x1");
}

PixelCloud project(const PointCloud& cloud, const CameraIntrinsics& intrinsics) {
  intrinsics.validate();
  if (cloud.frame_tag != FrameTag::Camera) {
    throw FrameMismatch("project expects a camera-frame cloud");
  }
  std::vector<std::size_t> behind;
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    if (cloud.points[i].z <= kMinProjectionDepth) behind.push_back(i);
  }
  if (!behind.empty()) {
    throw BehindCamera("points at or behind the image plane", std::move(behind));
  }
  const double center_x = intrinsics.width * 0.5;
  const double center_y = intrinsics.height * 0.5;
  PixelCloud out;
  out.points.reserve(cloud.points.size());
  for (const Vec3& p : cloud.points) {
    out.points.push_back(detail::project_point(p, intrinsics.focal_length, center_x, center_y));
  }
  out.semantic_tag = cloud.semantic_tag;
  return out;
}

Vec2 project_eyeball_center(const SharedEyeParams& shared, const CameraIntrinsics& intrinsics) {
  intrinsics.validate();
  if (shared.translation.z <= kMinProjectionDepth) {
    throw BehindCamera("eyeball center at or behind the image plane", {0});
  }
  return detail::project_point(shared.translation, intrinsics.focal_length,
                               intrinsics.width * 0.5, intrinsics.height * 0.5);
}

}  // namespace eyefit

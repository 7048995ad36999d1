#include "eyefit/geometry.hpp"

#include <cmath>
#include <string>

namespace eyefit {

void SharedEyeParams::validate() const {
  if (!(eyeball_radius > 0.0)) throw InvalidParameter("eyeball_radius must be positive");
  if (!(iris_radius > 0.0)) throw InvalidParameter("iris_radius must be positive");
  if (!(iris_radius < eyeball_radius)) {
    throw DegenerateGeometry("iris_radius must be smaller than eyeball_radius");
  }
  if (!(translation.z > 0.0)) throw InvalidParameter("eyeball must sit in front of the camera");
  if (!(focal_length > 0.0)) throw InvalidParameter("focal_length must be positive");
}

void FrameEyeParams::validate(double iris_radius) const {
  if (std::abs(pitch) > kMaxPitchYawRad || std::abs(yaw) > kMaxPitchYawRad) {
    throw InvalidParameter("pitch/yaw outside the +/-80 degree bound");
  }
  if (!(pupil_radius > 0.0)) throw InvalidParameter("pupil_radius must be positive");
  if (!(pupil_radius < iris_radius)) {
    throw InvalidParameter("pupil_radius must be smaller than iris_radius");
  }
}

double pupil_iris_distance(double eyeball_radius, double iris_radius) {
  if (!(eyeball_radius > 0.0) || !(iris_radius > 0.0)) {
    throw InvalidParameter("radii must be positive");
  }
  if (!(iris_radius < eyeball_radius)) {
    throw DegenerateGeometry("iris_radius must be smaller than eyeball_radius");
  }
  return detail::plane_distance_kernel(eyeball_radius, iris_radius);
}

PointCloud canonical_pupil_cloud(double pupil_radius, double plane_distance, int theta_samples,
                                 int rho_samples) {
  if (!(pupil_radius > 0.0)) throw InvalidParameter("pupil_radius must be positive");
  if (theta_samples < 1 || rho_samples < 1) {
    throw InvalidParameter("sample counts must be at least 1");
  }
  PointCloud cloud;
  cloud.points = detail::pupil_template(pupil_radius, plane_distance, theta_samples, rho_samples);
  cloud.frame_tag = FrameTag::Canonical;
  cloud.semantic_tag = SemanticTag::Pupil;
  return cloud;
}

PointCloud canonical_iris_cloud(double pupil_radius, double iris_radius, double plane_distance,
                                int theta_samples, int rho_samples) {
  if (!(pupil_radius > 0.0) || !(pupil_radius < iris_radius)) {
    throw InvalidParameter("requires 0 < pupil_radius < iris_radius");
  }
  if (theta_samples < 1 || rho_samples < 2) {
    throw InvalidParameter("iris annulus needs theta_samples >= 1 and rho_samples >= 2");
  }
  PointCloud cloud;
  cloud.points =
      detail::iris_template(pupil_radius, iris_radius, plane_distance, theta_samples, rho_samples);
  cloud.frame_tag = FrameTag::Canonical;
  cloud.semantic_tag = SemanticTag::Iris;
  return cloud;
}

RotationMatrix rotation_from_pitch_yaw(double pitch, double yaw) {
  return detail::rotation_kernel(pitch, yaw);
}

Vec3 gaze_from_rotation(const RotationMatrix& rotation) {
  return detail::gaze_kernel(rotation);
}

std::pair<double, double> pitch_yaw_from_gaze(const Vec3& gaze) {
  const double clamped = std::max(-1.0, std::min(1.0, gaze.y));
  const double pitch = std::asin(clamped);
  const double yaw = std::atan2(-gaze.x, -gaze.z);
  return {pitch, yaw};
}

PointCloud deform(const PointCloud& cloud, const RotationMatrix& rotation,
                  const Vec3& translation) {
  if (cloud.frame_tag != FrameTag::Canonical) {
    throw FrameMismatch("deform expects a canonical-frame cloud");
  }
  PointCloud out;
  out.points.reserve(cloud.points.size());
  for (const Vec3& p : cloud.points) {
    out.points.push_back(detail::rigid_transform(rotation, translation, p));
  }
  out.frame_tag = FrameTag::Camera;
  out.semantic_tag = cloud.semantic_tag;
  return out;
}

std::pair<Vec3, Vec3> eyeball_and_pupil_centers(const SharedEyeParams& shared,
                                                const FrameEyeParams& frame) {
  const double plane_distance =
      pupil_iris_distance(shared.eyeball_radius, shared.iris_radius);
  const Vec3 gaze = gaze_from_rotation(rotation_from_pitch_yaw(frame.pitch, frame.yaw));
  const Vec3 pupil_center = shared.translation + plane_distance * gaze;
  return {shared.translation, pupil_center};
}

bool is_rotation(const Mat3& m, double tol) {
  const Mat3 gram = m * transpose(m);
  const Mat3 eye = Mat3::identity();
  for (int i = 0; i < 9; ++i) {
    if (std::abs(gram.m[static_cast<std::size_t>(i)] - eye.m[static_cast<std::size_t>(i)]) > tol) {
      return false;
    }
  }
  return std::abs(determinant(m) - 1.0) <= tol;
}

}  // namespace eyefit

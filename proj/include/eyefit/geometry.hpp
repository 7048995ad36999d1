#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "eyefit/errors.hpp"
#include "eyefit/vec.hpp"

namespace eyefit {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

inline constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
inline constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

// Human eye movement bound: pitch and yaw stay within +/-80 degrees, roll is
// identically zero. The bound is inclusive.
inline constexpr double kMaxPitchYawRad = deg_to_rad(80.0);

// Point-sampling defaults: 72 angles x 8 radial steps = 576 template points.
inline constexpr int kDefaultThetaSamples = 72;
inline constexpr int kDefaultRhoSamples = 8;

// Sequence-constant unknowns. Lengths in millimeters, focal length in pixels.
// The camera looks along +z; the eyeball sits in front of it (z > 0).
struct SharedEyeParams {
  double eyeball_radius = 12.0;
  double iris_radius = 6.0;
  Vec3 translation{0.0, 0.0, 35.0};
  double focal_length = 160.0;

  void validate() const;
};

// Per-frame unknowns. Angles in radians internally; degrees only at external
// interfaces (files, CLI).
struct FrameEyeParams {
  double pitch = 0.0;
  double yaw = 0.0;
  double pupil_radius = 2.0;

  // iris_radius of the owning sequence bounds pupil_radius from above.
  void validate(double iris_radius) const;
};

enum class FrameTag { Canonical, Camera };
enum class SemanticTag { Pupil, Iris };

// Ordered 3D point set; order is outer loop over radial samples, inner loop
// over angular samples, and is preserved through deformation and projection.
struct PointCloud {
  std::vector<Vec3> points;
  FrameTag frame_tag = FrameTag::Canonical;
  SemanticTag semantic_tag = SemanticTag::Pupil;
};

using RotationMatrix = Mat3;

namespace detail {

// Distance from the eyeball center to the pupil/iris plane.
template <class S>
inline S plane_distance_kernel(const S& eyeball_radius, const S& iris_radius) {
  using std::sqrt;
  return sqrt(eyeball_radius * eyeball_radius - iris_radius * iris_radius);
}

// R_y(yaw) * R_x(pitch), expanded. Axes: x right, y down, z forward.
template <class S>
inline Mat3T<S> rotation_kernel(const S& pitch, const S& yaw) {
  using std::cos;
  using std::sin;
  const S cp = cos(pitch);
  const S sp = sin(pitch);
  const S cy = cos(yaw);
  const S sy = sin(yaw);
  Mat3T<S> r;
  r.m = {cy, sy * sp, sy * cp,  //
         S(0.0), cp, -sp,       //
         -sy, cy * sp, cy * cp};
  return r;
}

// R * (0,0,-1): the negated third column.
template <class S>
inline Vec3T<S> gaze_kernel(const Mat3T<S>& rotation) {
  return {-rotation.m[2], -rotation.m[5], -rotation.m[8]};
}

// Filled pupil disk on the plane z = -plane_distance. Radial samples k/n for
// k = 1..n skip the disk center; angular samples cover [0, 2pi) excluding 2pi.
template <class S>
std::vector<Vec3T<S>> pupil_template(const S& pupil_radius, const S& plane_distance,
                                     int theta_samples, int rho_samples) {
  std::vector<Vec3T<S>> points;
  points.reserve(static_cast<std::size_t>(theta_samples) * static_cast<std::size_t>(rho_samples));
  const S depth = -plane_distance;
  for (int k = 1; k <= rho_samples; ++k) {
    const double rho = static_cast<double>(k) / static_cast<double>(rho_samples);
    for (int j = 0; j < theta_samples; ++j) {
      const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(theta_samples);
      const double cx = rho * std::cos(theta);
      const double cy = rho * std::sin(theta);
      points.push_back({pupil_radius * cx, pupil_radius * cy, depth});
    }
  }
  return points;
}

// Iris annulus spanning [pupil_radius, iris_radius]; radial samples include
// both rims.
template <class S>
std::vector<Vec3T<S>> iris_template(const S& pupil_radius, const S& iris_radius,
                                    const S& plane_distance, int theta_samples,
                                    int rho_samples) {
  std::vector<Vec3T<S>> points;
  points.reserve(static_cast<std::size_t>(theta_samples) * static_cast<std::size_t>(rho_samples));
  const S depth = -plane_distance;
  const S band = iris_radius - pupil_radius;
  for (int k = 0; k < rho_samples; ++k) {
    const double rho = static_cast<double>(k) / static_cast<double>(rho_samples - 1);
    const S ring_radius = pupil_radius + band * rho;
    for (int j = 0; j < theta_samples; ++j) {
      const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(theta_samples);
      const double cx = std::cos(theta);
      const double cy = std::sin(theta);
      points.push_back({ring_radius * cx, ring_radius * cy, depth});
    }
  }
  return points;
}

template <class S>
inline Vec3T<S> rigid_transform(const Mat3T<S>& rotation, const Vec3T<S>& translation,
                                const Vec3T<S>& point) {
  return rotation * point + translation;
}

}  // namespace detail

// L = sqrt(re^2 - ri^2); throws DegenerateGeometry unless 0 < ri < re.
double pupil_iris_distance(double eyeball_radius, double iris_radius);

PointCloud canonical_pupil_cloud(double pupil_radius, double plane_distance,
                                 int theta_samples = kDefaultThetaSamples,
                                 int rho_samples = kDefaultRhoSamples);

PointCloud canonical_iris_cloud(double pupil_radius, double iris_radius, double plane_distance,
                                int theta_samples = kDefaultThetaSamples,
                                int rho_samples = kDefaultRhoSamples);

RotationMatrix rotation_from_pitch_yaw(double pitch, double yaw);

Vec3 gaze_from_rotation(const RotationMatrix& rotation);

// Inverse of gaze_from_rotation(rotation_from_pitch_yaw(...)) for |pitch|,
// |yaw| < 90 degrees.
std::pair<double, double> pitch_yaw_from_gaze(const Vec3& gaze);

// Rigid motion into camera coordinates; requires a canonical cloud.
PointCloud deform(const PointCloud& cloud, const RotationMatrix& rotation,
                  const Vec3& translation);

// (eyeball center, pupil/iris center) in camera coordinates.
std::pair<Vec3, Vec3> eyeball_and_pupil_centers(const SharedEyeParams& shared,
                                                const FrameEyeParams& frame);

inline double clamp_pitch_yaw(double angle) {
  if (angle > kMaxPitchYawRad) return kMaxPitchYawRad;
  if (angle < -kMaxPitchYawRad) return -kMaxPitchYawRad;
  return angle;
}

bool is_rotation(const Mat3& m, double tol = 1e-12);

}  // namespace eyefit

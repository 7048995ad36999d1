#pragma once

// Internal sequence-loss evaluator shared by total_loss, loss_and_gradient,
// and the fitter. The double path and the Dual path instantiate the same
// templates, so reported loss values are bit-identical between the two.

#include <cstdint>
#include <span>
#include <vector>

#include "eyefit/camera.hpp"
#include "eyefit/dual.hpp"
#include "eyefit/errors.hpp"
#include "eyefit/geometry.hpp"
#include "eyefit/kdtree.hpp"
#include "eyefit/losses.hpp"

namespace eyefit::detail {

// Derivative slots of one frame evaluation; matches the flat ParameterVector
// layout (shared prefix, then the frame-local block).
inline constexpr int kFrameSlots = 9;
using Dual9 = Dual<kFrameSlots>;

enum Slot : int {
  kSlotEyeballRadius = 0,
  kSlotIrisRadius = 1,
  kSlotTx = 2,
  kSlotTy = 3,
  kSlotTz = 4,
  kSlotFocal = 5,
  kSlotPitch = 6,
  kSlotYaw = 7,
  kSlotPupilRadius = 8,
};

template <class S>
struct FrameChain {
  std::vector<Vec2T<S>> pupil_pixels;
  std::vector<Vec2T<S>> iris_pixels;
  Vec3T<S> gaze;
};

// The full differentiable chain for one frame: canonical templates ->
// rotation/translation -> pinhole projection.
template <class S>
FrameChain<S> eval_frame_chain(const S& eyeball_radius, const S& iris_radius,
                               const Vec3T<S>& translation, const S& focal_length, const S& pitch,
                               const S& yaw, const S& pupil_radius, double center_x,
                               double center_y, int theta_samples, int rho_samples) {
  FrameChain<S> out;
  const S plane_distance = plane_distance_kernel(eyeball_radius, iris_radius);
  const Mat3T<S> rotation = rotation_kernel(pitch, yaw);
  out.gaze = gaze_kernel(rotation);

  const auto project_all = [&](std::vector<Vec3T<S>>&& canonical, const char* which) {
    std::vector<Vec2T<S>> pixels;
    pixels.reserve(canonical.size());
    std::vector<std::size_t> behind;
    for (std::size_t i = 0; i < canonical.size(); ++i) {
      const Vec3T<S> p = rigid_transform(rotation, translation, canonical[i]);
      if (scalar_value(p.z) <= kMinProjectionDepth) {
        behind.push_back(i);
        pixels.push_back({S(0.0), S(0.0)});
        continue;
      }
      pixels.push_back(project_point(p, focal_length, center_x, center_y));
    }
    if (!behind.empty()) {
      throw BehindCamera(std::string(which) + " points at or behind the image plane",
                         std::move(behind));
    }
    return pixels;
  };

  out.pupil_pixels =
      project_all(pupil_template(pupil_radius, plane_distance, theta_samples, rho_samples),
                  "pupil");
  out.iris_pixels = project_all(
      iris_template(pupil_radius, iris_radius, plane_distance, theta_samples, rho_samples),
      "iris");
  return out;
}

// Mean distance from S-valued points to their assigned constant targets.
template <class S>
S mean_assigned_distance(const std::vector<Vec2T<S>>& from, std::span<const Vec2> to,
                         std::span<const std::uint32_t> assignment) {
  using std::sqrt;
  S sum(0.0);
  for (std::size_t i = 0; i < from.size(); ++i) {
    const Vec2& t = to[assignment[i]];
    const S dx = from[i].x - t.x;
    const S dy = from[i].y - t.y;
    sum = sum + sqrt(dx * dx + dy * dy);
  }
  return sum / static_cast<double>(from.size());
}

// Opposite direction: constant sources against assigned S-valued points;
// normalized by the source cardinality.
template <class S>
S mean_assigned_distance_rev(std::span<const Vec2> from, const std::vector<Vec2T<S>>& to,
                             std::span<const std::uint32_t> assignment) {
  using std::sqrt;
  S sum(0.0);
  for (std::size_t i = 0; i < from.size(); ++i) {
    const Vec2T<S>& t = to[assignment[i]];
    const S dx = from[i].x - t.x;
    const S dy = from[i].y - t.y;
    sum = sum + sqrt(dx * dx + dy * dy);
  }
  return sum / static_cast<double>(from.size());
}

template <class S>
S gaze_residual(const Vec3T<S>& predicted, const Vec3& label, bool squared) {
  using std::sqrt;
  const S dx = predicted.x - label.x;
  const S dy = predicted.y - label.y;
  const S dz = predicted.z - label.z;
  const S sq = dx * dx + dy * dy + dz * dz;
  if (squared) return sq;
  return sqrt(sq);
}

template <class S>
S center_residual(const Vec2T<S>& predicted, const Vec2& label) {
  using std::sqrt;
  const S dx = predicted.x - label.x;
  const S dy = predicted.y - label.y;
  return sqrt(dx * dx + dy * dy);
}

inline std::vector<double> extract_values(const std::vector<double>& v) { return v; }

inline std::vector<double> extract_values(const std::vector<Dual9>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].v;
  return out;
}

struct SegFrameTerms {
  double pupil_pred_to_gt = 0.0;
  double iris_pred_to_gt = 0.0;
  double pupil_gt_to_pred = 0.0;
  double iris_gt_to_pred = 0.0;
};

// Single reduction used by both the value and the gradient path, so the
// assembled totals agree bit-for-bit.
LossBreakdown combine_terms(std::span<const SegFrameTerms> seg_terms,
                            std::span<const double> gaze_terms,
                            std::span<const double> center_terms, const LossWeights& weights,
                            bool seg_active, bool gaze_active, bool center_active);

class SequenceEvaluator {
 public:
  SequenceEvaluator(std::span<const SemanticObservation> observations,
                    const SequenceLabels& labels, const LossWeights& weights,
                    const LossOptions& options);

  std::size_t frame_count() const { return frame_count_; }
  const LossWeights& weights() const { return weights_; }
  const LossOptions& options() const { return options_; }

  LossBreakdown value(const SharedEyeParams& shared,
                      std::span<const FrameEyeParams> frames) const;

  // grad must have size 6 + 3 * frame_count and is overwritten.
  LossBreakdown value_and_gradient(const SharedEyeParams& shared,
                                   std::span<const FrameEyeParams> frames,
                                   std::span<double> grad) const;

 private:
  template <class S>
  LossBreakdown evaluate(const SharedEyeParams& shared, std::span<const FrameEyeParams> frames,
                         std::span<double> grad) const;

  std::span<const SemanticObservation> observations_;
  SequenceLabels labels_;
  LossWeights weights_;
  LossOptions options_;
  std::size_t frame_count_ = 0;
  double center_x_ = 0.0;
  double center_y_ = 0.0;
  bool seg_active_ = false;
  bool gaze_active_ = false;
  bool center_active_ = false;
  // Ground-truth trees outlive all evaluations; masks do not change.
  std::vector<KdTree2d> pupil_trees_;
  std::vector<KdTree2d> iris_trees_;
};

}  // namespace eyefit::detail

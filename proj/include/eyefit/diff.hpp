#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "eyefit/geometry.hpp"
#include "eyefit/losses.hpp"

namespace eyefit {

// Gradient evaluation requires this much slack between the radii; the plane
// distance derivative blows up as iris_radius -> eyeball_radius.
inline constexpr double kRadiiGradientGuard = 1e-6;  // mm

// Free scalars in fixed flat order:
//   [eyeball_radius, iris_radius, t_x, t_y, t_z, focal_length,
//    then per frame (pitch, yaw, pupil_radius)].
struct ParameterVector {
  SharedEyeParams shared;
  std::vector<FrameEyeParams> frames;

  static constexpr std::size_t kSharedCount = 6;
  static constexpr std::size_t kPerFrameCount = 3;

  std::size_t size() const { return kSharedCount + kPerFrameCount * frames.size(); }

  double get(std::size_t i) const;
  void set(std::size_t i, double value);

  std::vector<double> flat() const;
  static ParameterVector from_flat(std::span<const double> values, std::size_t frame_count);

  struct Interval {
    double lo = 0.0;
    double hi = 0.0;
  };

  // Live constraint box for entry i given the rest of the vector.
  Interval constraint_interval(std::size_t i) const;

  void validate() const;
};

// Same shape and ordering as the flat ParameterVector.
using Gradient = std::vector<double>;

// Loss value (identical to total_loss) plus the exact derivative of the
// implemented tie-broken, assignment-frozen objective.
std::pair<double, Gradient> loss_and_gradient(const ParameterVector& params,
                                              std::span<const SemanticObservation> observations,
                                              const SequenceLabels& labels,
                                              const LossWeights& weights,
                                              const LossOptions& options = {});

// As above but with the per-term breakdown; the fitter records it.
std::pair<LossBreakdown, Gradient> loss_and_gradient_detailed(
    const ParameterVector& params, std::span<const SemanticObservation> observations,
    const SequenceLabels& labels, const LossWeights& weights, const LossOptions& options = {});

// Central differences with nearest-neighbor assignments re-derived at each
// probe. Throws BoundaryTooClose when a probe would leave the constraint box.
Gradient finite_difference_gradient(const ParameterVector& params,
                                    std::span<const SemanticObservation> observations,
                                    const SequenceLabels& labels, const LossWeights& weights,
                                    const LossOptions& options = {}, double eps = 1e-6);

}  // namespace eyefit

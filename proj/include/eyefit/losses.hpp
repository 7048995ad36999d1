#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eyefit/camera.hpp"
#include "eyefit/geometry.hpp"

namespace eyefit {

// Ground-truth pixel sets for one frame. Coordinates are pixel centers
// (u + 0.5, v + 0.5); the iris set is the annulus class only and excludes
// pupil pixels.
struct SemanticObservation {
  std::vector<Vec2> pupil_pixels;
  std::vector<Vec2> iris_pixels;
  int width = 0;
  int height = 0;

  void validate() const;
};

struct LossWeights {
  double pred_to_gt = 0.0;
  double gt_to_pred = 0.0;
  double gaze = 0.0;
  double center = 0.0;

  void validate() const;
};

struct GazeLabel {
  Vec3 direction;  // unit norm
  std::size_t frame_index = 0;
};

struct CenterLabel {
  Vec2 position;  // pixels
  std::size_t frame_index = 0;
};

// Sparse supervision attached to a sequence.
struct SequenceLabels {
  std::vector<GazeLabel> gaze;
  std::vector<CenterLabel> centers;
};

struct LossOptions {
  int theta_samples = kDefaultThetaSamples;
  int rho_samples = kDefaultRhoSamples;
  // Eq-form switch: false keeps the unsquared norm, true squares each
  // per-frame gaze residual.
  bool squared_gaze = false;
};

// Weighted term values plus unweighted per-class directional means.
struct LossBreakdown {
  double total = 0.0;
  double segmentation = 0.0;
  double gaze = 0.0;
  double center = 0.0;
  double pupil_pred_to_gt = 0.0;
  double iris_pred_to_gt = 0.0;
  double pupil_gt_to_pred = 0.0;
  double iris_gt_to_pred = 0.0;
  bool gaze_labels_absent = true;
  bool center_labels_absent = true;
};

// Mean distance from each predicted point to its nearest ground-truth pixel.
double loss_pred_to_gt(const PixelCloud& pred, std::span<const Vec2> gt);

// Opposite direction; normalized by the ground-truth cardinality. Penalizes
// predictions that shrink inside the mask.
double loss_gt_to_pred(const PixelCloud& pred, std::span<const Vec2> gt);

// Eq-8 style combination over pupil and iris clouds, each directional term
// averaged over frames.
double segmentation_loss(std::span<const PixelCloud> pupil_clouds,
                         std::span<const PixelCloud> iris_clouds,
                         std::span<const SemanticObservation> observations,
                         const LossWeights& weights);

struct GazeLossResult {
  double value = 0.0;
  bool labels_absent = false;
};

GazeLossResult gaze_loss(std::span<const Vec3> predicted_gazes, std::span<const GazeLabel> labels,
                         double weight, bool squared = false);

struct CenterLossResult {
  double value = 0.0;
  bool labels_absent = false;
};

CenterLossResult center_loss(const Vec2& predicted_center, std::span<const CenterLabel> labels,
                             double weight);

// Full objective: geometry -> projection -> active loss terms. Terms with
// zero weight are skipped entirely. Intrinsics come from the shared focal
// length and the observation dimensions.
LossBreakdown total_loss(const SharedEyeParams& shared, std::span<const FrameEyeParams> frames,
                         std::span<const SemanticObservation> observations,
                         const SequenceLabels& labels, const LossWeights& weights,
                         const LossOptions& options = {});

}  // namespace eyefit

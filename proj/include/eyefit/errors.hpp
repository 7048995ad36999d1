#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eyefit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition or type-invariant violation on a plain input value.
struct InvalidParameter : Error {
  using Error::Error;
};

// Eye geometry that admits no real solution (e.g. iris radius >= eyeball radius).
struct DegenerateGeometry : Error {
  using Error::Error;
};

// Point cloud passed in the wrong coordinate frame.
struct FrameMismatch : Error {
  using Error::Error;
};

// A point with z <= depth epsilon reached the projection.
struct BehindCamera : Error {
  std::vector<std::size_t> indices;
  BehindCamera(const std::string& msg, std::vector<std::size_t> offending)
      : Error(msg), indices(std::move(offending)) {}
};

// A ground-truth pixel set required by an active loss term is empty.
struct EmptyObservation : Error {
  using Error::Error;
};

// Finite-difference probe would cross a constraint boundary.
struct BoundaryTooClose : Error {
  using Error::Error;
};

// Synthetic generator configuration with infeasible ranges.
struct InvalidConfig : Error {
  using Error::Error;
};

// 2D gaze angle requested for a gaze with no image-plane component.
struct Undefined2DGaze : Error {
  using Error::Error;
};

// Every optimizer restart produced a non-finite loss.
struct FitDiverged : Error {
  std::string diagnostics;
  FitDiverged(const std::string& msg, std::string detail)
      : Error(msg), diagnostics(std::move(detail)) {}
};

// Malformed manifest, report, or label file.
struct SchemaError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace eyefit

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eyefit/vec.hpp"

namespace eyefit {

struct NearestHit {
  std::uint32_t index = 0;
  double dist_sq = 0.0;
};

// Lexicographic minimum of (squared distance, index): equal distances resolve
// to the lowest index, so results are deterministic and match KdTree2d.
NearestHit brute_force_nearest(const Vec2& query, std::span<const Vec2> points);

// Static 2D k-d tree. Exact search with the same (dist_sq, index) ordering as
// brute_force_nearest; an equal-distance boundary never prunes, so the two
// backends agree bit-for-bit.
class KdTree2d {
 public:
  KdTree2d() = default;
  explicit KdTree2d(std::span<const Vec2> points);

  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }

  NearestHit nearest(const Vec2& query) const;

 private:
  struct Node {
    double split = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::uint32_t begin = 0;  // leaf payload range in order_
    std::uint32_t end = 0;
    std::uint8_t axis = 0;
    bool leaf = false;
  };

  std::int32_t build(std::uint32_t begin, std::uint32_t end, int depth);
  void search(std::int32_t node, const Vec2& query, NearestHit& best) const;

  std::vector<Vec2> points_;
  std::vector<std::uint32_t> order_;
  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
};

// Nearest target index for every query; picks the k-d tree backend for large
// target sets and the brute scan otherwise. Both give identical results.
std::vector<std::uint32_t> nearest_indices(std::span<const Vec2> queries,
                                           std::span<const Vec2> targets);

std::vector<std::uint32_t> nearest_indices(std::span<const Vec2> queries, const KdTree2d& tree);

}  // namespace eyefit

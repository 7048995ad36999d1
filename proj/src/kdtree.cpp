#include "eyefit/kdtree.hpp"

#include <algorithm>
#include <limits>

namespace eyefit {

namespace {

constexpr std::uint32_t kLeafSize = 8;
constexpr std::size_t kBruteForceCutoff = 64;

inline double dist_sq(const Vec2& a, const Vec2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline bool better(double d2, std::uint32_t idx, const NearestHit& best) {
  return d2 < best.dist_sq || (d2 == best.dist_sq && idx < best.index);
}

}  // namespace

NearestHit brute_force_nearest(const Vec2& query, std::span<const Vec2> points) {
  NearestHit best{0, std::numeric_limits<double>::infinity()};
  for (std::uint32_t i = 0; i < points.size(); ++i) {
    const double d2 = dist_sq(query, points[i]);
    if (better(d2, i, best)) best = {i, d2};
  }
  return best;
}

KdTree2d::KdTree2d(std::span<const Vec2> points)
    : points_(points.begin(), points.end()) {
  order_.resize(points_.size());
  for (std::uint32_t i = 0; i < order_.size(); ++i) order_[i] = i;
  if (!points_.empty()) {
    nodes_.reserve(2 * points_.size() / kLeafSize + 2);
    root_ = build(0, static_cast<std::uint32_t>(points_.size()), 0);
  }
}

std::int32_t KdTree2d::build(std::uint32_t begin, std::uint32_t end, int depth) {
  Node node;
  node.axis = static_cast<std::uint8_t>(depth & 1);
  if (end - begin <= kLeafSize) {
    node.leaf = true;
    node.begin = begin;
    node.end = end;
    nodes_.push_back(node);
    return static_cast<std::int32_t>(nodes_.size() - 1);
  }
  const std::uint32_t mid = begin + (end - begin) / 2;
  const auto axis_less = [&](std::uint32_t a, std::uint32_t b) {
    const double ca = node.axis == 0 ? points_[a].x : points_[a].y;
    const double cb = node.axis == 0 ? points_[b].x : points_[b].y;
    // Indices break coordinate ties so the layout is input-order independent
    // of the nth_element implementation.
    return ca < cb || (ca == cb && a < b);
  };
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end, axis_less);
  const std::uint32_t pivot = order_[mid];
  node.split = node.axis == 0 ? points_[pivot].x : points_[pivot].y;

  const std::int32_t self = static_cast<std::int32_t>(nodes_.size());
  nodes_.push_back(node);
  const std::int32_t left = build(begin, mid, depth + 1);
  const std::int32_t right = build(mid, end, depth + 1);
  nodes_[static_cast<std::size_t>(self)].left = left;
  nodes_[static_cast<std::size_t>(self)].right = right;
  return self;
}

void KdTree2d::search(std::int32_t node_id, const Vec2& query, NearestHit& best) const {
  const Node& node = nodes_[static_cast<std::size_t>(node_id)];
  if (node.leaf) {
    for (std::uint32_t i = node.begin; i < node.end; ++i) {
      const std::uint32_t idx = order_[i];
      const double d2 = dist_sq(query, points_[idx]);
      if (better(d2, idx, best)) best = {idx, d2};
    }
    return;
  }
  const double q = node.axis == 0 ? query.x : query.y;
  const double delta = q - node.split;
  const std::int32_t near_child = delta < 0.0 ? node.left : node.right;
  const std::int32_t far_child = delta < 0.0 ? node.right : node.left;
  search(near_child, query, best);
  // <= keeps equal-distance candidates reachable for the index tie-break.
  if (delta * delta <= best.dist_sq) search(far_child, query, best);
}

NearestHit KdTree2d::nearest(const Vec2& query) const {
  NearestHit best{0, std::numeric_limits<double>::infinity()};
  if (root_ >= 0) search(root_, query, best);
  return best;
}

std::vector<std::uint32_t> nearest_indices(std::span<const Vec2> queries,
                                           std::span<const Vec2> targets) {
  std::vector<std::uint32_t> out(queries.size());
  if (targets.size() > kBruteForceCutoff) {
    const KdTree2d tree(targets);
    for (std::size_t i = 0; i < queries.size(); ++i) out[i] = tree.nearest(queries[i]).index;
  } else {
    for (std::size_t i = 0; i < queries.size(); ++i) {
      out[i] = brute_force_nearest(queries[i], targets).index;
    }
  }
  return out;
}

std::vector<std::uint32_t> nearest_indices(std::span<const Vec2> queries, const KdTree2d& tree) {
  std::vector<std::uint32_t> out(queries.size());
  for (std::size_t i = 0; i < queries.size(); ++i) out[i] = tree.nearest(queries[i]).index;
  return out;
}

}  // namespace eyefit

#pragma once

#include "alps/common.hpp"

namespace alps {

/// Uniform bucket grid over a box for range and k-nearest-neighbour queries.
/// Built once per point set; queries are const and thread-safe.
class BucketIndex {
 public:
  BucketIndex(const Mat& points, const Box& box, double target_per_cell = 4.0);

  int size() const { return static_cast<int>(ids_.size()); }

  /// Appends ids of all points p with |p_l - center_l| <= radii_l per axis.
  void query_box(const Eigen::Ref<const Vec>& center,
                 const Eigen::Ref<const Vec>& radii, std::vector<int>& out) const;

  /// k nearest points by Euclidean distance; ties broken by point index.
  /// Returns pairs sorted by (distance^2, index).
  void query_knn(const Eigen::Ref<const Vec>& center, int k,
                 std::vector<std::pair<double, int>>& out) const;

  /// Squared distance to the single nearest point.
  double nearest_dist2(const Eigen::Ref<const Vec>& center) const;

 private:
  int cell_of(const Eigen::Ref<const Vec>& p) const;

  const Mat* pts_;
  Box box_;
  int d_;
  std::vector<int> bins_;     // bins per axis
  std::vector<double> width_; // cell width per axis
  std::vector<int> start_;    // CSR offsets, size cells+1
  std::vector<int> ids_;      // point ids grouped by cell
};

}  // namespace alps

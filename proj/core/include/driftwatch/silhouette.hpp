#pragma once

#include <cstdint>
#include <vector>

#include "driftwatch/types.hpp"

namespace driftwatch {

/// Average silhouette value s_i per pair index i, where pair i is the
/// clustering window {B_i, B_i+1}. Length is batch_count - 1.
struct SilhouetteSeries {
  std::vector<double> s;
  std::size_t k_used = 0;
  std::vector<std::uint64_t> seeds;
};

/// Silhouette differences d_i = |s_i - s_i-1| for i >= 2 and the pair
/// indices where d_i exceeds the threshold (strict).
struct DriftReport {
  std::vector<double> d;  // d[j] is d_{j+2} in 1-based pair indexing
  double threshold = 0.0;
  std::vector<std::size_t> drift_indices;  // sorted, subset of {2..len(s)}
};

/// Exact silhouette S(X_i) = (b - a) / max(a, b) for one point: a is the
/// mean distance to the other members of its own cluster (0 for a
/// singleton), b the smallest mean distance to any other non-empty cluster.
/// Returns 0 when a = b = 0. Requires at least 2 non-empty clusters.
double silhouette_sample(const Matrix& points,
                         const std::vector<std::size_t>& assignments,
                         std::size_t k, std::size_t point_index);

/// Arithmetic mean of silhouette_sample over all points.
double avg_silhouette(const Matrix& points,
                      const std::vector<std::size_t>& assignments,
                      std::size_t k);

/// For each consecutive batch pair, clusters the union with
/// minibatch_kmeans seeded seed_base + pair_index and records the average
/// silhouette.
SilhouetteSeries silhouette_series(const std::vector<TemporalBatch>& batches,
                                   std::size_t k, std::size_t minibatch_size,
                                   std::uint64_t seed_base);

/// Flags pair indices whose silhouette difference exceeds the threshold.
DriftReport detect_drift(const SilhouetteSeries& series,
                         double threshold = 0.05);

}  // namespace driftwatch

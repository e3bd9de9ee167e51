#pragma once

#include <cstdint>
#include <vector>

#include "driftwatch/types.hpp"

namespace driftwatch {

/// Outcome of one clustering run. Cluster ids are 0-based.
///
/// `distortion` is the sum of (unsquared) Euclidean point-to-centroid
/// distances — the reported quality metric. `objective_trace` records the
/// per-iteration sum of *squared* distances, the quantity the mean update
/// actually descends; for full k-means it is non-increasing at every step.
/// (Moving a centroid to the cluster mean can increase the unsquared sum,
/// so that series is not a valid descent check.)
struct ClusteringResult {
  std::size_t k = 0;
  Matrix centroids;                      // k x dim
  std::vector<std::size_t> assignments;  // per point, in [0, k)
  double distortion = 0.0;
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  std::vector<double> objective_trace;
};

/// Lloyd's k-means: centroids initialized at k distinct data points chosen
/// by seed, then alternate nearest-centroid assignment (ties to the lowest
/// centroid index) and centroid-to-cluster-mean updates until the centroids
/// move less than tol and no assignment changes, or max_iter. Empty clusters
/// are reseeded at the point farthest from its current centroid. The
/// returned assignments are always nearest-centroid consistent.
ClusteringResult kmeans(const Matrix& points, std::size_t k,
                        std::uint64_t seed, std::size_t max_iter = 100,
                        double tol = 1e-6);

/// MiniBatch variant: per iteration, all points are assigned to their
/// nearest centroid, a uniform random minibatch is drawn, and each centroid
/// is recomputed as the streaming mean of its minibatch members (centroids
/// with no minibatch member keep their position). Loops while the centroids
/// move at least tol, up to max_iter; final assignments are recomputed over
/// all points. Deterministic given seed. With minibatch_size = |points| the
/// update degenerates to the full-batch mean, i.e. kmeans.
ClusteringResult minibatch_kmeans(const Matrix& points, std::size_t k,
                                  std::size_t minibatch_size,
                                  std::uint64_t seed,
                                  std::size_t max_iter = 100,
                                  double tol = 1e-6);

/// Sum over points of the Euclidean distance to the assigned centroid.
double distortion(const Matrix& points, const Matrix& centroids,
                  const std::vector<std::size_t>& assignments);

}  // namespace driftwatch

#include "driftwatch/silhouette.hpp"

#include <cmath>
#include <limits>

#include "driftwatch/clustering.hpp"
#include "driftwatch/errors.hpp"

namespace driftwatch {

namespace {

std::vector<std::size_t> cluster_counts(
    const std::vector<std::size_t>& assignments, std::size_t k) {
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t a : assignments) {
    if (a >= k) throw DataError("silhouette: assignment out of range");
    ++counts[a];
  }
  return counts;
}

double sample_value(const Matrix& points,
                    const std::vector<std::size_t>& assignments,
                    const std::vector<std::size_t>& counts, std::size_t k,
                    std::size_t i) {
  // Per-cluster distance sums accumulated in ascending point order.
  std::vector<double> sums(k, 0.0);
  for (std::size_t j = 0; j < points.rows; ++j) {
    if (j == i) continue;
    sums[assignments[j]] += euclidean(points.row(i), points.row(j));
  }
  const std::size_t own = assignments[i];
  const double a =
      counts[own] > 1 ? sums[own] / static_cast<double>(counts[own] - 1) : 0.0;
  double b = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < k; ++c) {
    if (c == own || counts[c] == 0) continue;
    b = std::min(b, sums[c] / static_cast<double>(counts[c]));
  }
  if (a == 0.0 && b == 0.0) return 0.0;
  return (b - a) / std::max(a, b);
}

}  // namespace

double silhouette_sample(const Matrix& points,
                         const std::vector<std::size_t>& assignments,
                         std::size_t k, std::size_t point_index) {
  if (k < 2) throw DataError("silhouette: k must be >= 2");
  if (assignments.size() != points.rows)
    throw DataError("silhouette: assignment count mismatch");
  const std::vector<std::size_t> counts = cluster_counts(assignments, k);
  std::size_t nonempty = 0;
  for (std::size_t c : counts) nonempty += c > 0 ? 1 : 0;
  if (nonempty < 2)
    throw DataError("silhouette: fewer than 2 non-empty clusters");
  return sample_value(points, assignments, counts, k, point_index);
}

double avg_silhouette(const Matrix& points,
                      const std::vector<std::size_t>& assignments,
                      std::size_t k) {
  if (k < 2) throw DataError("silhouette: k must be >= 2");
  if (points.rows == 0) throw DataError("silhouette: no points");
  if (assignments.size() != points.rows)
    throw DataError("silhouette: assignment count mismatch");
  const std::vector<std::size_t> counts = cluster_counts(assignments, k);
  std::size_t nonempty = 0;
  for (std::size_t c : counts) nonempty += c > 0 ? 1 : 0;
  if (nonempty < 2)
    throw DataError("silhouette: fewer than 2 non-empty clusters");

  double sum = 0.0;
  for (std::size_t i = 0; i < points.rows; ++i)
    sum += sample_value(points, assignments, counts, k, i);
  return sum / static_cast<double>(points.rows);
}

SilhouetteSeries silhouette_series(const std::vector<TemporalBatch>& batches,
                                   std::size_t k, std::size_t minibatch_size,
                                   std::uint64_t seed_base) {
  if (batches.size() < 2)
    throw DataError("silhouette_series: need at least 2 batches");
  const std::size_t dim = batches.front().samples.front().values.size();

  SilhouetteSeries series;
  series.k_used = k;
  series.s.reserve(batches.size() - 1);
  for (std::size_t i = 0; i + 1 < batches.size(); ++i) {
    Matrix window(0, dim);
    window.data.reserve((batches[i].samples.size() +
                         batches[i + 1].samples.size()) *
                        dim);
    for (const FeatureVector& fv : batches[i].samples)
      window.push_row(fv.values);
    for (const FeatureVector& fv : batches[i + 1].samples)
      window.push_row(fv.values);

    const std::uint64_t seed = seed_base + (i + 1);  // 1-based pair index
    const ClusteringResult clustering =
        minibatch_kmeans(window, k, minibatch_size, seed);
    series.s.push_back(avg_silhouette(window, clustering.assignments, k));
    series.seeds.push_back(seed);
  }
  return series;
}

DriftReport detect_drift(const SilhouetteSeries& series, double threshold) {
  if (series.s.size() < 2)
    throw DataError("detect_drift: series too short (need >= 2 values)");
  DriftReport report;
  report.threshold = threshold;
  report.d.reserve(series.s.size() - 1);
  for (std::size_t i = 1; i < series.s.size(); ++i) {
    const double di = std::abs(series.s[i] - series.s[i - 1]);
    report.d.push_back(di);
    if (di > threshold) report.drift_indices.push_back(i + 1);  // 1-based
  }
  return report;
}

}  // namespace driftwatch

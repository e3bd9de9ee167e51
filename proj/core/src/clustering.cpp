#include "driftwatch/clustering.hpp"

#include <algorithm>
#include <cmath>

#include "driftwatch/errors.hpp"
#include "driftwatch/rng.hpp"

namespace driftwatch {

namespace {

void check_args(const Matrix& points, std::size_t k) {
  if (points.rows == 0) throw DataError("clustering: no points");
  if (k == 0) throw DataError("clustering: k must be positive");
  if (k > points.rows)
    throw DataError("clustering: k=" + std::to_string(k) + " exceeds " +
                    std::to_string(points.rows) + " points");
}

std::size_t nearest(const Matrix& points, const Matrix& centroids,
                    std::size_t i) {
  std::size_t best = 0;
  double best_d = euclidean(points.row(i), centroids.row(0));
  for (std::size_t j = 1; j < centroids.rows; ++j) {
    const double d = euclidean(points.row(i), centroids.row(j));
    if (d < best_d) {  // ties keep the lowest centroid index
      best_d = d;
      best = j;
    }
  }
  return best;
}

void assign_all(const Matrix& points, const Matrix& centroids,
                std::vector<std::size_t>& assignments) {
  assignments.resize(points.rows);
  for (std::size_t i = 0; i < points.rows; ++i)
    assignments[i] = nearest(points, centroids, i);
}

/// Reseeds every empty cluster at the point farthest from its assigned
/// centroid, reassigning after each repair. Bounded by k rounds.
void repair_empty(const Matrix& points, Matrix& centroids,
                  std::vector<std::size_t>& assignments, std::size_t k) {
  for (std::size_t round = 0; round < k; ++round) {
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t a : assignments) ++counts[a];
    std::size_t empty = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (counts[j] == 0) {
        empty = j;
        break;
      }
    }
    if (empty == k) return;
    std::size_t far = 0;
    double far_d = -1.0;
    for (std::size_t i = 0; i < points.rows; ++i) {
      const double d = euclidean(points.row(i), centroids.row(assignments[i]));
      if (d > far_d) {
        far_d = d;
        far = i;
      }
    }
    std::copy(points.row(far).begin(), points.row(far).end(),
              centroids.row(empty).begin());
    assign_all(points, centroids, assignments);
  }
}

Matrix init_centroids(const Matrix& points, std::size_t k, Rng& rng) {
  const std::vector<std::size_t> idx =
      rng.sample_without_replacement(points.rows, k);
  Matrix centroids(k, points.cols);
  for (std::size_t j = 0; j < k; ++j)
    std::copy(points.row(idx[j]).begin(), points.row(idx[j]).end(),
              centroids.row(j).begin());
  return centroids;
}

double squared_objective(const Matrix& points, const Matrix& centroids,
                         const std::vector<std::size_t>& assignments) {
  double sum = 0.0;
  for (std::size_t i = 0; i < points.rows; ++i) {
    const auto p = points.row(i);
    const auto c = centroids.row(assignments[i]);
    for (std::size_t f = 0; f < points.cols; ++f) {
      const double d = p[f] - c[f];
      sum += d * d;
    }
  }
  return sum;
}

Matrix cluster_means(const Matrix& points, const Matrix& centroids,
                     const std::vector<std::size_t>& assignments,
                     std::size_t k) {
  Matrix means(k, points.cols);
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < points.rows; ++i) {
    const std::size_t j = assignments[i];
    ++counts[j];
    const auto p = points.row(i);
    for (std::size_t f = 0; f < points.cols; ++f) means.at(j, f) += p[f];
  }
  for (std::size_t j = 0; j < k; ++j) {
    if (counts[j] > 0) {
      for (std::size_t f = 0; f < points.cols; ++f)
        means.at(j, f) /= static_cast<double>(counts[j]);
    } else {
      std::copy(centroids.row(j).begin(), centroids.row(j).end(),
                means.row(j).begin());
    }
  }
  return means;
}

double max_movement(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.rows; ++j)
    m = std::max(m, euclidean(a.row(j), b.row(j)));
  return m;
}

}  // namespace

ClusteringResult kmeans(const Matrix& points, std::size_t k,
                        std::uint64_t seed, std::size_t max_iter, double tol) {
  check_args(points, k);
  Rng rng(seed);

  ClusteringResult res;
  res.k = k;
  res.seed = seed;
  res.centroids = init_centroids(points, k, rng);
  assign_all(points, res.centroids, res.assignments);
  repair_empty(points, res.centroids, res.assignments, k);
  res.objective_trace.push_back(
      squared_objective(points, res.centroids, res.assignments));

  for (std::size_t it = 0; it < max_iter; ++it) {
    Matrix next = cluster_means(points, res.centroids, res.assignments, k);
    const double movement = max_movement(next, res.centroids);

    std::vector<std::size_t> next_assign;
    assign_all(points, next, next_assign);
    repair_empty(points, next, next_assign, k);

    const bool changed = next_assign != res.assignments;
    res.centroids = std::move(next);
    res.assignments = std::move(next_assign);
    res.iterations = it + 1;
    res.objective_trace.push_back(
        squared_objective(points, res.centroids, res.assignments));
    if (movement < tol && !changed) break;
  }

  res.distortion = distortion(points, res.centroids, res.assignments);
  return res;
}

ClusteringResult minibatch_kmeans(const Matrix& points, std::size_t k,
                                  std::size_t minibatch_size,
                                  std::uint64_t seed, std::size_t max_iter,
                                  double tol) {
  check_args(points, k);
  if (minibatch_size == 0 || minibatch_size > points.rows)
    throw DataError("minibatch_kmeans: minibatch_size must be in [1, points]");
  Rng rng(seed);

  ClusteringResult res;
  res.k = k;
  res.seed = seed;
  res.centroids = init_centroids(points, k, rng);

  for (std::size_t it = 0; it < max_iter; ++it) {
    res.iterations = it + 1;
    assign_all(points, res.centroids, res.assignments);
    repair_empty(points, res.centroids, res.assignments, k);

    const std::vector<std::size_t> batch =
        rng.sample_without_replacement(points.rows, minibatch_size);

    // Streaming per-centroid means over the minibatch: untouched centroids
    // keep their position.
    Matrix next = res.centroids;
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t m : batch) {
      const std::size_t j = res.assignments[m];
      ++counts[j];
      const double w = 1.0 / static_cast<double>(counts[j]);
      const auto p = points.row(m);
      for (std::size_t f = 0; f < points.cols; ++f)
        next.at(j, f) += w * (p[f] - next.at(j, f));
    }
    // A centroid's first minibatch member resets it to that point, so the
    // streaming mean is the plain mean of its minibatch members.
    const double movement = max_movement(next, res.centroids);
    res.centroids = std::move(next);
    if (movement < tol) break;
  }

  assign_all(points, res.centroids, res.assignments);
  repair_empty(points, res.centroids, res.assignments, k);
  res.distortion = distortion(points, res.centroids, res.assignments);
  return res;
}

double distortion(const Matrix& points, const Matrix& centroids,
                  const std::vector<std::size_t>& assignments) {
  if (points.cols != centroids.cols)
    throw DataError("distortion: dimension mismatch");
  if (assignments.size() != points.rows)
    throw DataError("distortion: assignment count mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < points.rows; ++i) {
    if (assignments[i] >= centroids.rows)
      throw DataError("distortion: assignment out of range");
    sum += euclidean(points.row(i), centroids.row(assignments[i]));
  }
  return sum;
}

}  // namespace driftwatch

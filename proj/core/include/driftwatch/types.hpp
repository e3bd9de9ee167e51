#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace driftwatch {

/// One timestamped sample: numeric feature values plus a family label.
struct FeatureVector {
  std::string sample_id;
  std::int64_t timestamp = 0;  // seconds since epoch
  std::vector<double> values;
  std::string family;
};

/// A family's samples, sorted ascending by (timestamp, sample_id).
/// sample_id breaks timestamp ties so ordering is total and deterministic.
struct Dataset {
  std::string family;
  std::size_t dim = 0;
  std::vector<std::string> feature_names;
  std::vector<FeatureVector> samples;

  void sort_samples();
  /// Throws DataError if any invariant is broken (value count, finiteness,
  /// strict ordering, uniform family).
  void check_invariants() const;
};

/// Fixed-size block of consecutive-in-time samples (B_i, 1-based index).
/// The first half is the training half (B_i^t), the last half the test
/// half (B_i^T).
struct TemporalBatch {
  std::size_t index = 0;  // 1-based
  std::vector<FeatureVector> samples;

  std::span<const FeatureVector> train_half() const {
    return {samples.data(), samples.size() / 2};
  }
  std::span<const FeatureVector> test_half() const {
    return {samples.data() + samples.size() / 2,
            samples.size() - samples.size() / 2};
  }
};

/// Two disjoint random subsets of the other family (Y_t and Y_T).
struct OtherFamilySplit {
  std::vector<FeatureVector> y_train;
  std::vector<FeatureVector> y_test;
  std::uint64_t seed = 0;
};

/// Dense row-major matrix of doubles.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<const double> row(std::size_t r) const {
    return {data.data() + r * cols, cols};
  }
  std::span<double> row(std::size_t r) {
    return {data.data() + r * cols, cols};
  }
  void push_row(std::span<const double> values) {
    data.insert(data.end(), values.begin(), values.end());
    ++rows;
  }
};

/// Euclidean distance between two equal-length vectors.
double euclidean(std::span<const double> a, std::span<const double> b);

/// Feature rows of a span of samples packed into a Matrix.
Matrix to_matrix(std::span<const FeatureVector> samples, std::size_t dim);

}  // namespace driftwatch

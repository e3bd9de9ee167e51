#include "driftwatch/types.hpp"

#include <algorithm>
#include <cmath>

#include "driftwatch/errors.hpp"

namespace driftwatch {

double euclidean(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

Matrix to_matrix(std::span<const FeatureVector> samples, std::size_t dim) {
  Matrix m(samples.size(), dim);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].values.size() != dim) {
      throw DataError("sample " + samples[i].sample_id +
                      " has dimension mismatch");
    }
    std::copy(samples[i].values.begin(), samples[i].values.end(),
              m.row(i).begin());
  }
  return m;
}

void Dataset::sort_samples() {
  std::sort(samples.begin(), samples.end(),
            [](const FeatureVector& a, const FeatureVector& b) {
              if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
              return a.sample_id < b.sample_id;
            });
}

void Dataset::check_invariants() const {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const FeatureVector& s = samples[i];
    if (s.values.size() != dim) {
      throw DataError("sample " + s.sample_id + " has " +
                      std::to_string(s.values.size()) + " values, expected " +
                      std::to_string(dim));
    }
    for (double v : s.values) {
      if (!std::isfinite(v)) {
        throw DataError("sample " + s.sample_id + " has non-finite value");
      }
    }
    if (s.family != family) {
      throw DataError("sample " + s.sample_id + " has family '" + s.family +
                      "', dataset is '" + family + "'");
    }
    if (i > 0) {
      const FeatureVector& p = samples[i - 1];
      const bool ordered = p.timestamp < s.timestamp ||
                           (p.timestamp == s.timestamp &&
                            p.sample_id < s.sample_id);
      if (!ordered) {
        throw DataError("samples not strictly sorted at '" + s.sample_id +
                        "'");
      }
    }
  }
}

}  // namespace driftwatch

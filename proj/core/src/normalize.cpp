#include "driftwatch/normalize.hpp"

#include <limits>

#include "driftwatch/errors.hpp"

namespace driftwatch {

NormalizeResult normalize(const Dataset& dataset) {
  if (dataset.samples.empty()) throw DataError("normalize: empty dataset");
  const std::size_t dim = dataset.dim;

  NormalizationTable table;
  table.min.assign(dim, std::numeric_limits<double>::infinity());
  table.max.assign(dim, -std::numeric_limits<double>::infinity());
  for (const FeatureVector& s : dataset.samples) {
    for (std::size_t f = 0; f < dim; ++f) {
      table.min[f] = std::min(table.min[f], s.values[f]);
      table.max[f] = std::max(table.max[f], s.values[f]);
    }
  }

  NormalizeResult out;
  out.table = table;
  out.dataset = apply_normalization(dataset, table);
  return out;
}

Dataset apply_normalization(const Dataset& dataset,
                            const NormalizationTable& table) {
  if (table.min.size() != dataset.dim)
    throw DataError("normalization table dimension mismatch");
  Dataset out = dataset;
  for (FeatureVector& s : out.samples) {
    for (std::size_t f = 0; f < dataset.dim; ++f) {
      const double range = table.max[f] - table.min[f];
      s.values[f] = range > 0.0 ? (s.values[f] - table.min[f]) / range : 0.0;
    }
  }
  return out;
}

}  // namespace driftwatch

#pragma once

#include <vector>

#include "driftwatch/types.hpp"

namespace driftwatch {

/// Per-feature (min, max) fitted over a whole dataset, reusable on
/// other-family data so both families live in one feature scale.
struct NormalizationTable {
  std::vector<double> min;
  std::vector<double> max;
};

struct NormalizeResult {
  Dataset dataset;
  NormalizationTable table;
};

/// Min-max scales each feature to [0,1] over the whole dataset. Constant
/// features map to 0.0. Idempotent: normalizing an already-normalized
/// dataset is an elementwise identity.
///
/// The table is fitted on the full family before batching, matching the
/// pipeline where preprocessing precedes the temporal split; the implied
/// train/test leakage is a property of that pipeline, kept as-is.
NormalizeResult normalize(const Dataset& dataset);

/// Applies a previously fitted table to another dataset. Values outside the
/// fitted range land outside [0,1]; they are intentionally not clipped, since
/// clipping would collapse out-of-range features onto the boundary and erase
/// class margins.
Dataset apply_normalization(const Dataset& dataset,
                            const NormalizationTable& table);

}  // namespace driftwatch

#pragma once

#include <cstdint>
#include <vector>

#include "driftwatch/types.hpp"

namespace driftwatch {

struct BatchingResult {
  std::vector<TemporalBatch> batches;
  std::size_t dropped_remainder = 0;
};

/// Splits a sorted dataset into floor(n / batch_size) temporal batches.
/// Trailing remainder samples are dropped and counted. batch_size must be
/// even so train/test halves are equal; the dataset needs at least
/// 2 * batch_size samples.
BatchingResult partition_batches(const Dataset& dataset,
                                 std::size_t batch_size = 50);

/// Draws two disjoint subsets of half_size samples each from the other
/// family, uniformly without replacement, deterministic given seed.
OtherFamilySplit sample_other_family(const Dataset& other,
                                     std::size_t half_size,
                                     std::uint64_t seed);

}  // namespace driftwatch

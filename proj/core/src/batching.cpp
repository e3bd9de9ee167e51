#include "driftwatch/batching.hpp"

#include "driftwatch/errors.hpp"
#include "driftwatch/log.hpp"
#include "driftwatch/rng.hpp"

namespace driftwatch {

BatchingResult partition_batches(const Dataset& dataset,
                                 std::size_t batch_size) {
  if (batch_size == 0 || batch_size % 2 != 0)
    throw ConfigError("batch_size must be a positive even integer, got " +
                      std::to_string(batch_size));
  const std::size_t n = dataset.samples.size();
  if (n < 2 * batch_size)
    throw DataError("family '" + dataset.family + "' has " +
                    std::to_string(n) + " samples, need at least " +
                    std::to_string(2 * batch_size));

  BatchingResult out;
  const std::size_t n_batches = n / batch_size;
  out.batches.reserve(n_batches);
  for (std::size_t b = 0; b < n_batches; ++b) {
    TemporalBatch batch;
    batch.index = b + 1;
    batch.samples.assign(dataset.samples.begin() + b * batch_size,
                         dataset.samples.begin() + (b + 1) * batch_size);
    out.batches.push_back(std::move(batch));
  }
  out.dropped_remainder = n - n_batches * batch_size;
  if (out.dropped_remainder > 0) {
    log::debug("partition_batches: dropped ", out.dropped_remainder,
               " trailing samples of '", dataset.family, "'");
  }
  return out;
}

OtherFamilySplit sample_other_family(const Dataset& other,
                                     std::size_t half_size,
                                     std::uint64_t seed) {
  const std::size_t n = other.samples.size();
  if (n < 2 * half_size)
    throw DataError("other family '" + other.family + "' has " +
                    std::to_string(n) + " samples, need at least " +
                    std::to_string(2 * half_size));
  Rng rng(seed);
  const std::vector<std::size_t> idx =
      rng.sample_without_replacement(n, 2 * half_size);
  OtherFamilySplit split;
  split.seed = seed;
  split.y_train.reserve(half_size);
  split.y_test.reserve(half_size);
  for (std::size_t i = 0; i < half_size; ++i)
    split.y_train.push_back(other.samples[idx[i]]);
  for (std::size_t i = half_size; i < 2 * half_size; ++i)
    split.y_test.push_back(other.samples[idx[i]]);
  return split;
}

}  // namespace driftwatch

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "driftwatch/types.hpp"

namespace driftwatch {

enum class DriftMode { sudden, gradual };

/// One center shift. Sudden: every batch >= batch_index carries the full
/// shift. Gradual: batch b >= batch_index carries fraction
/// min(1, (b - batch_index + 1) / ramp_batches); ramp_batches = 1 encodes
/// sudden.
struct DriftEvent {
  std::size_t batch_index = 0;  // 1-based, in (1, n_batches]
  std::vector<double> shift;
  DriftMode mode = DriftMode::sudden;
  std::size_t ramp_batches = 1;
};

/// Recipe for a synthetic family with known ground-truth drift points.
/// Samples are drawn from an isotropic Gaussian mixture around the active
/// centers; drift translates all centers by the event shifts.
struct DriftSchedule {
  std::size_t n_batches = 0;
  std::size_t batch_size = 50;
  std::size_t dim = 0;
  std::vector<std::vector<double>> base_centers;
  std::vector<DriftEvent> drift_events;
  double noise_sigma = 1.0;
  std::uint64_t seed = 0;

  void validate() const;

  /// Total shift applied to the base centers at a given 1-based batch.
  std::vector<double> shift_at(std::size_t batch_index) const;
};

/// Generates n_batches * batch_size samples with strictly increasing
/// timestamps, then min-max scales the whole family (values are clipped to
/// the schedule's plausible range first, which only binds on extreme noise
/// tails). Deterministic given schedule.seed.
Dataset generate_family(const DriftSchedule& schedule,
                        const std::string& family_name);

/// Pair indices i whose clustering window {B_i, B_i+1} straddles a center
/// change: exactly the indices a correct detector should flag.
std::vector<std::size_t> ground_truth_drift(const DriftSchedule& schedule);

}  // namespace driftwatch

#include "driftwatch/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "driftwatch/errors.hpp"
#include "driftwatch/normalize.hpp"
#include "driftwatch/rng.hpp"

namespace driftwatch {

void DriftSchedule::validate() const {
  if (n_batches == 0 || batch_size == 0 || dim == 0)
    throw ConfigError("drift schedule: n_batches, batch_size, dim must be positive");
  if (base_centers.empty())
    throw ConfigError("drift schedule: at least one base center required");
  for (const auto& c : base_centers) {
    if (c.size() != dim)
      throw ConfigError("drift schedule: base center dimension mismatch");
  }
  if (!(noise_sigma > 0.0))
    throw ConfigError("drift schedule: noise_sigma must be positive");
  for (std::size_t i = 0; i < drift_events.size(); ++i) {
    const DriftEvent& e = drift_events[i];
    if (e.batch_index <= 1 || e.batch_index > n_batches)
      throw ConfigError("drift schedule: event batch_index " +
                        std::to_string(e.batch_index) +
                        " outside (1, n_batches]");
    if (i > 0 && e.batch_index <= drift_events[i - 1].batch_index)
      throw ConfigError(
          "drift schedule: event batch indices must be strictly increasing");
    if (e.shift.size() != dim)
      throw ConfigError("drift schedule: shift vector dimension mismatch");
    if (e.ramp_batches < 1)
      throw ConfigError("drift schedule: ramp_batches must be >= 1");
  }
}

std::vector<double> DriftSchedule::shift_at(std::size_t batch_index) const {
  std::vector<double> shift(dim, 0.0);
  for (const DriftEvent& e : drift_events) {
    if (batch_index < e.batch_index) continue;
    double frac = 1.0;
    if (e.mode == DriftMode::gradual) {
      frac = std::min(1.0, static_cast<double>(batch_index - e.batch_index + 1) /
                               static_cast<double>(e.ramp_batches));
    }
    for (std::size_t f = 0; f < dim; ++f) shift[f] += e.shift[f] * frac;
  }
  return shift;
}

Dataset generate_family(const DriftSchedule& schedule,
                        const std::string& family_name) {
  schedule.validate();
  const std::size_t dim = schedule.dim;

  // Plausible value range from the schedule itself: every center the
  // schedule can produce, padded by 8 sigma of noise.
  std::vector<double> lo(dim, 0.0), hi(dim, 0.0);
  bool first = true;
  for (std::size_t b = 1; b <= schedule.n_batches; ++b) {
    const std::vector<double> shift = schedule.shift_at(b);
    for (const auto& center : schedule.base_centers) {
      for (std::size_t f = 0; f < dim; ++f) {
        const double v = center[f] + shift[f];
        if (first) {
          lo[f] = hi[f] = v;
        } else {
          lo[f] = std::min(lo[f], v);
          hi[f] = std::max(hi[f], v);
        }
      }
      first = false;
    }
  }
  for (std::size_t f = 0; f < dim; ++f) {
    lo[f] -= 8.0 * schedule.noise_sigma;
    hi[f] += 8.0 * schedule.noise_sigma;
  }

  Dataset raw;
  raw.family = family_name;
  raw.dim = dim;
  raw.feature_names.reserve(dim);
  for (std::size_t f = 0; f < dim; ++f)
    raw.feature_names.push_back("f" + std::to_string(f));

  Rng rng(schedule.seed);
  const std::int64_t t0 = 1600000000;
  char idbuf[64];
  std::size_t idx = 0;
  for (std::size_t b = 1; b <= schedule.n_batches; ++b) {
    const std::vector<double> shift = schedule.shift_at(b);
    for (std::size_t s = 0; s < schedule.batch_size; ++s, ++idx) {
      const std::size_t comp =
          static_cast<std::size_t>(rng.below(schedule.base_centers.size()));
      FeatureVector fv;
      std::snprintf(idbuf, sizeof(idbuf), "%s-%06zu", family_name.c_str(),
                    idx + 1);
      fv.sample_id = idbuf;
      fv.timestamp = t0 + static_cast<std::int64_t>(idx) * 60;
      fv.family = family_name;
      fv.values.resize(dim);
      for (std::size_t f = 0; f < dim; ++f) {
        double v = schedule.base_centers[comp][f] + shift[f] +
                   schedule.noise_sigma * rng.normal();
        fv.values[f] = std::clamp(v, lo[f], hi[f]);
      }
      raw.samples.push_back(std::move(fv));
    }
  }

  Dataset scaled = normalize(raw).dataset;
  scaled.check_invariants();
  return scaled;
}

std::vector<std::size_t> ground_truth_drift(const DriftSchedule& schedule) {
  schedule.validate();
  std::vector<std::size_t> truth;
  for (std::size_t i = 1; i + 1 <= schedule.n_batches; ++i) {
    if (schedule.shift_at(i) != schedule.shift_at(i + 1)) truth.push_back(i);
  }
  return truth;
}

}  // namespace driftwatch

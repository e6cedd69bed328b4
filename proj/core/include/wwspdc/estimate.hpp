#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace wwspdc {

/**
 * Monte Carlo estimate aggregated from batch means.
 *
 * std_error is the sample standard deviation of the batch means divided by
 * sqrt(n_batches); it is zero for analytically sourced values.
 */
struct RateEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t n_samples = 0;
  std::int64_t n_batches = 0;
};

/** RateEstimate together with the per-batch means it was aggregated from. */
struct BatchedEstimate {
  RateEstimate estimate;
  std::vector<double> batch_means;
};

/** Mean and standard error of a set of batch means (needs at least 2). */
RateEstimate aggregate_batch_means(std::span<const double> batch_means,
                                   std::int64_t n_samples);

BatchedEstimate make_batched_estimate(std::vector<double> batch_means,
                                      std::int64_t n_samples);

/** Half-open sample index range [first, last) covered by one batch. */
std::pair<std::int64_t, std::int64_t> batch_range(std::int64_t n_samples,
                                                  std::int64_t n_batches,
                                                  std::int64_t batch);

/**
 * Runs fn(batch) for every batch index in [0, n_batches).
 *
 * Work is claimed batch-by-batch from an atomic counter, so results written
 * per batch index are identical for any worker count.
 */
void for_each_batch(std::int64_t n_batches, int n_workers,
                    const std::function<void(std::int64_t)>& fn);

}  // namespace wwspdc

#include "wwspdc/estimate.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace wwspdc {

RateEstimate aggregate_batch_means(std::span<const double> batch_means,
                                   std::int64_t n_samples) {
  const auto b = static_cast<std::int64_t>(batch_means.size());
  if (b < 2) {
    throw std::invalid_argument("aggregate_batch_means: need at least 2 batches");
  }
  double sum = 0.0;
  for (double v : batch_means) sum += v;
  const double mean = sum / static_cast<double>(b);
  double ss = 0.0;
  for (double v : batch_means) {
    const double d = v - mean;
    ss += d * d;
  }
  const double batch_std = std::sqrt(ss / static_cast<double>(b - 1));
  return RateEstimate{mean, batch_std / std::sqrt(static_cast<double>(b)),
                      n_samples, b};
}

BatchedEstimate make_batched_estimate(std::vector<double> batch_means,
                                      std::int64_t n_samples) {
  BatchedEstimate out;
  out.estimate = aggregate_batch_means(batch_means, n_samples);
  out.batch_means = std::move(batch_means);
  return out;
}

std::pair<std::int64_t, std::int64_t> batch_range(std::int64_t n_samples,
                                                  std::int64_t n_batches,
                                                  std::int64_t batch) {
  return {batch * n_samples / n_batches, (batch + 1) * n_samples / n_batches};
}

void for_each_batch(std::int64_t n_batches, int n_workers,
                    const std::function<void(std::int64_t)>& fn) {
  if (n_workers <= 1 || n_batches <= 1) {
    for (std::int64_t b = 0; b < n_batches; ++b) fn(b);
    return;
  }
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::int64_t b = next.fetch_add(1);
      if (b >= n_batches) return;
      fn(b);
    }
  };
  const int count = static_cast<int>(
      std::min<std::int64_t>(n_workers, n_batches));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(count));
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace wwspdc

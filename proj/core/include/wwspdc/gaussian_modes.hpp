#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

#include "wwspdc/estimate.hpp"
#include "wwspdc/mode.hpp"
#include "wwspdc/rng.hpp"

namespace wwspdc {

using ModeAmplitude = std::complex<double>;

/** One draw of the two vacuum mode amplitudes. */
struct VacuumSample {
  ModeAmplitude a_s;
  ModeAmplitude a_i;
};

struct SamplerConfig {
  std::uint64_t seed = 1;
  std::int64_t n_samples = 1'000'000;
  std::int64_t n_batches = 100;
};

/** Throws std::invalid_argument unless n_samples >= n_batches >= 2. */
void validate(const SamplerConfig& config);

/**
 * Random-access stream of vacuum samples.
 *
 * Each quadrature (real and imaginary part of either mode) is an independent
 * Gaussian with mean 0 and variance 1/4, so <|a|^2> = 1/2 per mode. For a
 * fixed seed, at(k) depends only on k, never on evaluation order.
 */
class VacuumSampler {
 public:
  explicit VacuumSampler(const SamplerConfig& config);

  VacuumSample at(std::int64_t index) const;

  std::int64_t size() const { return config_.n_samples; }
  const SamplerConfig& config() const { return config_; }

  static constexpr std::string_view rng_id() { return CounterRng::id(); }

 private:
  SamplerConfig config_;
  CounterRng rng_;
};

/** Validates the config and constructs the sampler in one step. */
VacuumSampler sample_vacuum(const SamplerConfig& config);

/** Batched estimate of a complex-valued quantity, component-wise. */
struct ComplexEstimate {
  RateEstimate re;
  RateEstimate im;
};

/**
 * Batched empirical estimate of <a^n conj(a)^m> for one mode.
 *
 * The exact vacuum value is 0 for n != m and n! / 2^n for n == m.
 */
ComplexEstimate empirical_moment(const VacuumSampler& sampler, int n, int m,
                                 Mode mode);

/** Exact vacuum moment <|a|^(2n)> = n! / 2^n. */
double exact_vacuum_moment(int n);

}  // namespace wwspdc

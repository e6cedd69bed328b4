#include "wwspdc/gaussian_modes.hpp"

#include <stdexcept>
#include <string>

namespace wwspdc {
namespace {

// Component standard deviation giving <|a|^2> = 1/2.
constexpr double kQuadratureSigma = 0.5;

std::complex<double> int_pow(std::complex<double> z, int k) {
  std::complex<double> out{1.0, 0.0};
  for (int j = 0; j < k; ++j) out *= z;
  return out;
}

}  // namespace

void validate(const SamplerConfig& config) {
  if (config.n_samples <= 0) {
    throw std::invalid_argument("SamplerConfig: n_samples must be positive, got " +
                                std::to_string(config.n_samples));
  }
  if (config.n_batches < 2) {
    throw std::invalid_argument("SamplerConfig: n_batches must be at least 2, got " +
                                std::to_string(config.n_batches));
  }
  if (config.n_samples < config.n_batches) {
    throw std::invalid_argument(
        "SamplerConfig: n_samples must be at least n_batches (" +
        std::to_string(config.n_samples) + " < " +
        std::to_string(config.n_batches) + ")");
  }
}

VacuumSampler::VacuumSampler(const SamplerConfig& config)
    : config_(config), rng_(config.seed) {
  validate(config_);
}

VacuumSample VacuumSampler::at(std::int64_t index) const {
  const auto draws =
      rng_.normals_at(static_cast<std::uint64_t>(index), kQuadratureSigma);
  return VacuumSample{{draws[0], draws[1]}, {draws[2], draws[3]}};
}

VacuumSampler sample_vacuum(const SamplerConfig& config) {
  return VacuumSampler(config);
}

ComplexEstimate empirical_moment(const VacuumSampler& sampler, int n, int m,
                                 Mode mode) {
  if (n < 0 || m < 0) {
    throw std::invalid_argument("empirical_moment: exponents must be non-negative");
  }
  const auto& cfg = sampler.config();
  std::vector<double> batch_re(static_cast<std::size_t>(cfg.n_batches));
  std::vector<double> batch_im(static_cast<std::size_t>(cfg.n_batches));
  for (std::int64_t b = 0; b < cfg.n_batches; ++b) {
    const auto [first, last] = batch_range(cfg.n_samples, cfg.n_batches, b);
    std::complex<double> sum{0.0, 0.0};
    for (std::int64_t k = first; k < last; ++k) {
      const VacuumSample s = sampler.at(k);
      const ModeAmplitude a = (mode == Mode::s) ? s.a_s : s.a_i;
      sum += int_pow(a, n) * int_pow(std::conj(a), m);
    }
    const auto count = static_cast<double>(last - first);
    batch_re[static_cast<std::size_t>(b)] = sum.real() / count;
    batch_im[static_cast<std::size_t>(b)] = sum.imag() / count;
  }
  return ComplexEstimate{aggregate_batch_means(batch_re, cfg.n_samples),
                         aggregate_batch_means(batch_im, cfg.n_samples)};
}

double exact_vacuum_moment(int n) {
  double value = 1.0;
  for (int k = 1; k <= n; ++k) value *= 0.5 * static_cast<double>(k);
  return value;
}

}  // namespace wwspdc

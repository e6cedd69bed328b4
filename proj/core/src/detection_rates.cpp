#include "wwspdc/detection_rates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wwspdc/spdc_evolution.hpp"

namespace wwspdc {
namespace {

double cos_sq_difference(const AnalyzerAngles& angles) {
  const double c = std::cos(angles.theta() - angles.phi());
  return c * c;
}

void validate_efficiency(const EfficiencyPair& eff) {
  if (!(eff.eta_a >= 0.0 && eff.eta_a <= 1.0) ||
      !(eff.eta_b >= 0.0 && eff.eta_b <= 1.0)) {
    throw std::invalid_argument("efficiencies must lie in [0, 1]");
  }
}

// Batch means of fn(sample) over every batch of the stream.
template <typename PerSample>
std::vector<double> batch_means_of(const VacuumSampler& sampler, int n_workers,
                                   PerSample fn) {
  const auto& cfg = sampler.config();
  std::vector<double> means(static_cast<std::size_t>(cfg.n_batches));
  for_each_batch(cfg.n_batches, n_workers, [&](std::int64_t b) {
    const auto [first, last] = batch_range(cfg.n_samples, cfg.n_batches, b);
    double sum = 0.0;
    for (std::int64_t k = first; k < last; ++k) sum += fn(sampler.at(k));
    means[static_cast<std::size_t>(b)] = sum / static_cast<double>(last - first);
  });
  return means;
}

}  // namespace

double convention_factor(Convention convention) {
  return convention == Convention::hilbert_normalized ? 2.0 : 1.0;
}

double analytic_single(std::complex<double> d, Convention convention) {
  validate_gain(d);
  return convention_factor(convention) * 0.5 * std::norm(d);
}

double analytic_coincidence(std::complex<double> d, const AnalyzerAngles& angles,
                            Convention convention) {
  validate_gain(d);
  return convention_factor(convention) * 0.5 * std::norm(d) *
         cos_sq_difference(angles);
}

BatchedEstimate mc_single(const VacuumSampler& sampler, std::complex<double> d,
                          double angle, Party party, Convention convention,
                          int n_workers) {
  validate_gain(d);
  const double factor = convention_factor(convention);
  // Only the chosen station's analyzer enters the per-sample term.
  const AnalyzerAngles angles = (party == Party::alice)
                                    ? AnalyzerAngles(angle, 0.0)
                                    : AnalyzerAngles(0.0, angle);
  auto means = batch_means_of(sampler, n_workers, [&](const VacuumSample& s) {
    const IntensitySet v = intensities(partial_fields(s, d, angles));
    return factor * ((party == Party::alice) ? v.i_a1 : v.i_b1);
  });
  return make_batched_estimate(std::move(means), sampler.size());
}

BatchedEstimate mc_coincidence(const VacuumSampler& sampler,
                               std::complex<double> d,
                               const AnalyzerAngles& angles,
                               Convention convention, int n_workers) {
  validate_gain(d);
  const auto& cfg = sampler.config();

  struct MomentSums {
    double a0 = 0, a1 = 0, a = 0, b0 = 0, b1 = 0, b = 0;
    double a0_b1 = 0, a1_b0 = 0, ab = 0, a0_b0 = 0;
  };
  std::vector<double> values(static_cast<std::size_t>(cfg.n_batches));
  for_each_batch(cfg.n_batches, n_workers, [&](std::int64_t batch) {
    const auto [first, last] = batch_range(cfg.n_samples, cfg.n_batches, batch);
    MomentSums m;
    for (std::int64_t k = first; k < last; ++k) {
      const IntensitySet v = intensities(partial_fields(sampler.at(k), d, angles));
      m.a0 += v.i_a0;
      m.a1 += v.i_a1;
      m.a += v.i_a;
      m.b0 += v.i_b0;
      m.b1 += v.i_b1;
      m.b += v.i_b;
      m.a0_b1 += v.i_a0 * v.i_b1;
      m.a1_b0 += v.i_a1 * v.i_b0;
      m.ab += v.i_a * v.i_b;
      m.a0_b0 += v.i_a0 * v.i_b0;
    }
    const double count = static_cast<double>(last - first);
    const double a0 = m.a0 / count, a1 = m.a1 / count, a = m.a / count;
    const double b0 = m.b0 / count, b1 = m.b1 / count, b = m.b / count;
    const double a0_b1 = m.a0_b1 / count, a1_b0 = m.a1_b0 / count;
    const double ab = m.ab / count, a0_b0 = m.a0_b0 / count;
    values[static_cast<std::size_t>(batch)] =
        (convention == Convention::stochastic_model)
            ? a0_b1 + a1_b0 - a1 * b0 - b1 * a0
            : ab - a * b - a0_b0 + a0 * b0;
  });
  return make_batched_estimate(std::move(values), cfg.n_samples);
}

double apply_efficiency(double rate, const EfficiencyPair& eff, RateKind kind) {
  validate_efficiency(eff);
  switch (kind) {
    case RateKind::single_a:
      return eff.eta_a * rate;
    case RateKind::single_b:
      return eff.eta_b * rate;
    case RateKind::coincidence:
      return eff.eta_a * eff.eta_b * rate;
  }
  throw std::invalid_argument("apply_efficiency: unknown rate kind");
}

BatchedEstimate clamped_mc_single(const VacuumSampler& sampler,
                                  std::complex<double> d, double theta,
                                  double zpf_floor, int n_workers) {
  validate_gain(d);
  const AnalyzerAngles angles(theta, 0.0);
  auto means = batch_means_of(sampler, n_workers, [&](const VacuumSample& s) {
    const IntensitySet v = intensities(partial_fields(s, d, angles));
    return std::max(v.i_a - zpf_floor, 0.0) - std::max(v.i_a0 - zpf_floor, 0.0);
  });
  return make_batched_estimate(std::move(means), sampler.size());
}

}  // namespace wwspdc

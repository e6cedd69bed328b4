#include "wwspdc/bell_analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wwspdc/spdc_evolution.hpp"

namespace wwspdc {
namespace {

BatchedEstimate exact_value(double v) {
  BatchedEstimate out;
  out.estimate = RateEstimate{v, 0.0, 0, 0};
  return out;
}

double cos_sq(double delta) {
  const double c = std::cos(delta);
  return c * c;
}

BatchedEstimate scaled(BatchedEstimate e, double factor) {
  e.estimate.mean *= factor;
  e.estimate.std_error *= factor;
  for (double& v : e.batch_means) v *= factor;
  return e;
}

bool batch_means_consistent(const std::vector<const BatchedEstimate*>& parts) {
  const std::size_t b = parts.front()->batch_means.size();
  if (b < 2) return false;
  for (const BatchedEstimate* p : parts) {
    if (p->batch_means.size() != b) return false;
  }
  return true;
}

}  // namespace

ChSetting::ChSetting(double theta1, double phi1, double theta2, double phi2)
    : theta1_(AnalyzerAngles::normalize(theta1)),
      phi1_(AnalyzerAngles::normalize(phi1)),
      theta2_(AnalyzerAngles::normalize(theta2)),
      phi2_(AnalyzerAngles::normalize(phi2)) {}

ChSetting standard_setting() {
  constexpr double pi = std::numbers::pi;
  return ChSetting(pi / 4.0, pi / 8.0, 0.0, 3.0 * pi / 8.0);
}

BatchedEstimate PredictionRateSource::single_alice(double) const {
  return exact_value(0.5 * k_);
}

BatchedEstimate PredictionRateSource::single_bob(double) const {
  return exact_value(0.5 * k_);
}

BatchedEstimate PredictionRateSource::coincidence(double theta, double phi) const {
  return exact_value(0.5 * k_ * cos_sq(theta - phi));
}

AnalyticRateSource::AnalyticRateSource(std::complex<double> d,
                                       Convention convention)
    : d_(d), convention_(convention) {
  validate_gain(d);
}

BatchedEstimate AnalyticRateSource::single_alice(double) const {
  return exact_value(analytic_single(d_, convention_));
}

BatchedEstimate AnalyticRateSource::single_bob(double) const {
  return exact_value(analytic_single(d_, convention_));
}

BatchedEstimate AnalyticRateSource::coincidence(double theta, double phi) const {
  return exact_value(analytic_coincidence(d_, AnalyzerAngles(theta, phi),
                                          convention_));
}

McRateSource::McRateSource(const VacuumSampler& sampler, std::complex<double> d,
                           Convention convention, int n_workers)
    : sampler_(sampler), d_(d), convention_(convention), n_workers_(n_workers) {
  validate_gain(d);
}

BatchedEstimate McRateSource::single_alice(double theta) const {
  return mc_single(sampler_, d_, theta, Party::alice, convention_, n_workers_);
}

BatchedEstimate McRateSource::single_bob(double phi) const {
  return mc_single(sampler_, d_, phi, Party::bob, convention_, n_workers_);
}

BatchedEstimate McRateSource::coincidence(double theta, double phi) const {
  return mc_coincidence(sampler_, d_, AnalyzerAngles(theta, phi), convention_,
                        n_workers_);
}

FockRateSource::FockRateSource(int cutoff, std::complex<double> d,
                               Convention convention)
    : space_(cutoff), d_(d), convention_(convention) {
  validate_gain(d);
}

BatchedEstimate FockRateSource::single_alice(double theta) const {
  const double scale = 0.5 * convention_factor(convention_);
  return exact_value(scale * single_rate(space_, d_, AnalyzerAngles(theta, 0.0)));
}

BatchedEstimate FockRateSource::single_bob(double phi) const {
  // The oracle singles are analyzer-independent and station-symmetric.
  const double scale = 0.5 * convention_factor(convention_);
  return exact_value(scale * single_rate(space_, d_, AnalyzerAngles(phi, 0.0)));
}

BatchedEstimate FockRateSource::coincidence(double theta, double phi) const {
  const double scale = 0.5 * convention_factor(convention_);
  return exact_value(scale *
                     coincidence_rate(space_, d_, AnalyzerAngles(theta, phi)));
}

ChResult ch_evaluate(const RateSource& source, const ChSetting& setting) {
  const BatchedEstimate sa = source.single_alice(setting.theta1());
  const BatchedEstimate sb = source.single_bob(setting.phi1());
  const BatchedEstimate c11 = source.coincidence(setting.theta1(), setting.phi1());
  const BatchedEstimate c12 = source.coincidence(setting.theta1(), setting.phi2());
  const BatchedEstimate c21 = source.coincidence(setting.theta2(), setting.phi1());
  const BatchedEstimate c22 = source.coincidence(setting.theta2(), setting.phi2());

  ChResult r;
  r.lhs = sa.estimate.mean + sb.estimate.mean;
  r.rhs = c11.estimate.mean + c12.estimate.mean + c21.estimate.mean -
          c22.estimate.mean;
  r.margin = r.lhs - r.rhs;

  const std::vector<const BatchedEstimate*> parts{&sa, &sb, &c11, &c12, &c21, &c22};
  if (batch_means_consistent(parts)) {
    // Same sample batches underlie all six estimates, so evaluate the whole
    // combination per batch to keep their correlations in the error bar.
    const std::size_t b = sa.batch_means.size();
    std::vector<double> lhs_b(b), rhs_b(b), margin_b(b);
    for (std::size_t k = 0; k < b; ++k) {
      lhs_b[k] = sa.batch_means[k] + sb.batch_means[k];
      rhs_b[k] = c11.batch_means[k] + c12.batch_means[k] + c21.batch_means[k] -
                 c22.batch_means[k];
      margin_b[k] = lhs_b[k] - rhs_b[k];
    }
    const std::int64_t n = sa.estimate.n_samples;
    r.lhs_err = aggregate_batch_means(lhs_b, n).std_error;
    r.rhs_err = aggregate_batch_means(rhs_b, n).std_error;
    r.margin_err = aggregate_batch_means(margin_b, n).std_error;
    r.mc_errors = true;
    r.violated = r.margin < -3.0 * r.margin_err;
  } else {
    r.mc_errors = false;
    r.violated = r.margin < 0.0;
  }
  return r;
}

bool efficiency_violation_possible(const EfficiencyPair& eff) {
  if (!(eff.eta_a >= 0.0 && eff.eta_a <= 1.0) ||
      !(eff.eta_b >= 0.0 && eff.eta_b <= 1.0)) {
    throw std::invalid_argument("efficiencies must lie in [0, 1]");
  }
  return eff.eta_a + eff.eta_b < (1.0 + std::numbers::sqrt2) * eff.eta_a * eff.eta_b;
}

namespace {

/** Source wrapper applying detector efficiencies to every rate. */
class EfficiencyScaledSource : public RateSource {
 public:
  EfficiencyScaledSource(const RateSource& base, const EfficiencyPair& eff)
      : base_(base), eff_(eff) {}

  BatchedEstimate single_alice(double theta) const override {
    return scaled(base_.single_alice(theta), eff_.eta_a);
  }
  BatchedEstimate single_bob(double phi) const override {
    return scaled(base_.single_bob(phi), eff_.eta_b);
  }
  BatchedEstimate coincidence(double theta, double phi) const override {
    return scaled(base_.coincidence(theta, phi), eff_.eta_a * eff_.eta_b);
  }

 private:
  const RateSource& base_;
  EfficiencyPair eff_;
};

}  // namespace

ChResult ch_with_efficiency(const RateSource& source, const ChSetting& setting,
                            const EfficiencyPair& eff) {
  if (!(eff.eta_a >= 0.0 && eff.eta_a <= 1.0) ||
      !(eff.eta_b >= 0.0 && eff.eta_b <= 1.0)) {
    throw std::invalid_argument("efficiencies must lie in [0, 1]");
  }
  return ch_evaluate(EfficiencyScaledSource(source, eff), setting);
}

double symmetric_efficiency_threshold() {
  return 2.0 * (std::numbers::sqrt2 - 1.0);
}

}  // namespace wwspdc

#pragma once

#include <complex>
#include <memory>

#include "wwspdc/detection_rates.hpp"
#include "wwspdc/estimate.hpp"
#include "wwspdc/fock_oracle.hpp"
#include "wwspdc/gaussian_modes.hpp"

namespace wwspdc {

/** Analyzer settings for a Clauser-Horne run, each reduced to [0, pi). */
class ChSetting {
 public:
  ChSetting(double theta1, double phi1, double theta2, double phi2);

  double theta1() const { return theta1_; }
  double phi1() const { return phi1_; }
  double theta2() const { return theta2_; }
  double phi2() const { return phi2_; }

 private:
  double theta1_, phi1_, theta2_, phi2_;
};

/** (pi/4, pi/8, 0, 3pi/8): the setting that maximizes the CH violation. */
ChSetting standard_setting();

/**
 * Source of singles and coincidence rates for CH evaluation.
 *
 * Analytic sources return zero standard errors and no batch means; Monte
 * Carlo sources return batch means so the CH margin error can be evaluated
 * per batch, preserving correlations between the six estimates.
 */
class RateSource {
 public:
  virtual ~RateSource() = default;
  virtual BatchedEstimate single_alice(double theta) const = 0;
  virtual BatchedEstimate single_bob(double phi) const = 0;
  virtual BatchedEstimate coincidence(double theta, double phi) const = 0;
};

/** Quantum prediction with overall scale K: singles K/2, coincidences (K/2) cos^2. */
class PredictionRateSource : public RateSource {
 public:
  explicit PredictionRateSource(double k) : k_(k) {}
  BatchedEstimate single_alice(double theta) const override;
  BatchedEstimate single_bob(double phi) const override;
  BatchedEstimate coincidence(double theta, double phi) const override;

 private:
  double k_;
};

/** Closed-form rates for gain d under the chosen convention. */
class AnalyticRateSource : public RateSource {
 public:
  AnalyticRateSource(std::complex<double> d, Convention convention);
  BatchedEstimate single_alice(double theta) const override;
  BatchedEstimate single_bob(double phi) const override;
  BatchedEstimate coincidence(double theta, double phi) const override;

 private:
  std::complex<double> d_;
  Convention convention_;
};

/** Monte Carlo rates drawn from a shared vacuum sample stream. */
class McRateSource : public RateSource {
 public:
  McRateSource(const VacuumSampler& sampler, std::complex<double> d,
               Convention convention, int n_workers = 1);
  BatchedEstimate single_alice(double theta) const override;
  BatchedEstimate single_bob(double phi) const override;
  BatchedEstimate coincidence(double theta, double phi) const override;

 private:
  const VacuumSampler& sampler_;
  std::complex<double> d_;
  Convention convention_;
  int n_workers_;
};

/** Rates from the truncated number-basis oracle, rescaled per convention. */
class FockRateSource : public RateSource {
 public:
  FockRateSource(int cutoff, std::complex<double> d, Convention convention);
  BatchedEstimate single_alice(double theta) const override;
  BatchedEstimate single_bob(double phi) const override;
  BatchedEstimate coincidence(double theta, double phi) const override;

 private:
  TruncatedSpace space_;
  std::complex<double> d_;
  Convention convention_;
};

/**
 * Clauser-Horne evaluation of
 *   <theta1> + <phi1> >= <theta1 phi1> + <theta1 phi2> + <theta2 phi1> - <theta2 phi2>.
 *
 * margin = lhs - rhs; negative margin violates the inequality. With MC
 * errors present, violated requires margin < -3 * margin_err.
 */
struct ChResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double lhs_err = 0.0;
  double rhs_err = 0.0;
  double margin_err = 0.0;
  bool mc_errors = false;
  bool violated = false;
};

ChResult ch_evaluate(const RateSource& source, const ChSetting& setting);

/** True when eta_a + eta_b < (1 + sqrt(2)) eta_a eta_b (strict). */
bool efficiency_violation_possible(const EfficiencyPair& eff);

/** CH evaluation with singles scaled by eta and coincidences by eta_a eta_b. */
ChResult ch_with_efficiency(const RateSource& source, const ChSetting& setting,
                            const EfficiencyPair& eff);

/** Symmetric-efficiency violation threshold 2 (sqrt(2) - 1). */
double symmetric_efficiency_threshold();

}  // namespace wwspdc

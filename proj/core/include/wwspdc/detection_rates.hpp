#pragma once

#include <complex>

#include "wwspdc/estimate.hpp"
#include "wwspdc/gaussian_modes.hpp"
#include "wwspdc/polarization_fields.hpp"

namespace wwspdc {

/**
 * Normalization convention for detection rates.
 *
 * hilbert_normalized values are exactly twice the stochastic_model values,
 * for singles and coincidences alike.
 */
enum class Convention { hilbert_normalized, stochastic_model };

/** 2 for hilbert_normalized, 1 for stochastic_model. */
double convention_factor(Convention convention);

enum class Party { alice, bob };

enum class RateKind { single_a, single_b, coincidence };

struct EfficiencyPair {
  double eta_a = 1.0;
  double eta_b = 1.0;
};

/** Singles rate: |d|^2 (hilbert) or |d|^2 / 2 (stochastic); analyzer-independent. */
double analytic_single(std::complex<double> d, Convention convention);

/** Coincidence rate: |d|^2 cos^2(theta - phi), halved in the stochastic convention. */
double analytic_coincidence(std::complex<double> d, const AnalyzerAngles& angles,
                            Convention convention);

/**
 * Monte Carlo singles estimate.
 *
 * Per-sample term is factor * i_x1 for the chosen party; the other station's
 * analyzer never enters, so singles cannot signal.
 */
BatchedEstimate mc_single(const VacuumSampler& sampler, std::complex<double> d,
                          double angle, Party party, Convention convention,
                          int n_workers = 1);

/**
 * Monte Carlo coincidence estimate.
 *
 * Per batch, moment means are combined per the convention's formula:
 *   stochastic: <i_a0 i_b1> + <i_a1 i_b0> - <i_a1><i_b0> - <i_b1><i_a0>
 *   hilbert:    <i_a i_b> - <i_a><i_b> - <i_a0 i_b0> + <i_a0><i_b0>
 * and the batch values are aggregated into mean and standard error.
 */
BatchedEstimate mc_coincidence(const VacuumSampler& sampler,
                               std::complex<double> d,
                               const AnalyzerAngles& angles,
                               Convention convention, int n_workers = 1);

/** Scales a rate by eta_a, eta_b, or their product. Etas must lie in [0, 1]. */
double apply_efficiency(double rate, const EfficiencyPair& eff, RateKind kind);

/**
 * Exploratory clamped singles estimate (stochastic scale).
 *
 * Estimates <[i_a - floor]_+> - <[i_a0 - floor]_+> for a user-supplied
 * constant surrogate background floor. Not a physical default: the model's
 * background is a process, not a constant, and this mode exists only to
 * study the positivity clamp. With a floor the clamp never reaches, the
 * value reduces to the plain singles estimate.
 */
BatchedEstimate clamped_mc_single(const VacuumSampler& sampler,
                                  std::complex<double> d, double theta,
                                  double zpf_floor, int n_workers = 1);

}  // namespace wwspdc

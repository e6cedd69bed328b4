#pragma once

#include <complex>

#include "wwspdc/gaussian_modes.hpp"

namespace wwspdc {

/**
 * Parameters of one pump-driven downconversion interval.
 *
 * coupling_c is the dimensionless product of coupling strength and
 * interaction time; gain_d = coupling_c / (1 + |coupling_c|^2 / 2) is the
 * single-pass gain entering the production transform. Frequency matching
 * omega_p = omega_s + omega_i is built in.
 */
struct SpdcParams {
  std::complex<double> coupling_c;
  std::complex<double> gain_d;
  double omega_s = 0.0;
  double omega_i = 0.0;
  double interaction_time = 0.0;

  double omega_p() const { return omega_s + omega_i; }
};

/** Builds SpdcParams from the coupling; gain is derived, never supplied. */
SpdcParams make_spdc_params(std::complex<double> coupling_c, double omega_s,
                            double omega_i, double interaction_time);

/** D = C / (1 + |C|^2 / 2); preserves the phase of C. */
std::complex<double> map_c_to_d(std::complex<double> c);

/** Throws std::domain_error if |d| >= 1 (amplification bound). */
void validate_gain(std::complex<double> d);

/** True when |d| is outside the perturbative range (|d| > 0.2). */
bool beyond_perturbative_range(std::complex<double> d);

/** Free evolution a -> a exp(-i omega t). */
ModeAmplitude free_evolve(ModeAmplitude a, double omega, double t);

/**
 * Production transform (a_s, a_i) -> (a_s + D conj(a_i), a_i + D conj(a_s)).
 *
 * The common scale factor of the exact interval map is dropped; it cancels
 * in every normalized rate.
 */
VacuumSample spdc_transform(const VacuumSample& sample, const SpdcParams& params);
VacuumSample spdc_transform(const VacuumSample& sample, std::complex<double> gain_d);

/**
 * Fixed-step RK4 integration of the rotating-frame pair equations
 * db_s/dt = -i A conj(b_i), db_i/dt = -i A conj(b_s) over [0, duration].
 *
 * Free phases are removed analytically by the frame, so the result is the
 * lab-frame solution rotated back by exp(+i omega t) per mode. |b_s|^2 -
 * |b_i|^2 is conserved exactly by the flow.
 */
VacuumSample integrate_coupled_odes(const VacuumSample& initial,
                                    std::complex<double> coupling_a,
                                    double duration, int n_steps);

}  // namespace wwspdc

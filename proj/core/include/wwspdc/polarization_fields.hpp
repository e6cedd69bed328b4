#pragma once

#include <complex>

#include "wwspdc/gaussian_modes.hpp"

namespace wwspdc {

/** Analyzer orientations for the two stations, stored reduced to [0, pi). */
class AnalyzerAngles {
 public:
  AnalyzerAngles(double theta, double phi)
      : theta_(normalize(theta)), phi_(normalize(phi)) {}

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  static double normalize(double angle);

 private:
  double theta_;
  double phi_;
};

/**
 * Partial fields behind the analyzers.
 *
 * e_a0/e_b0 carry the unconverted vacuum amplitudes; e_a1/e_b1 the
 * first-order downconversion contribution proportional to the gain.
 */
struct FieldSet {
  std::complex<double> e_a0;
  std::complex<double> e_a1;
  std::complex<double> e_b0;
  std::complex<double> e_b1;
};

/** Detected intensities; i_a1 is the pump-on excess 2 Re(e_a1 conj(e_a0)) + |e_a1|^2. */
struct IntensitySet {
  double i_a0 = 0.0;
  double i_a1 = 0.0;
  double i_a = 0.0;
  double i_b0 = 0.0;
  double i_b1 = 0.0;
  double i_b = 0.0;
};

FieldSet partial_fields(const VacuumSample& sample, std::complex<double> gain_d,
                        const AnalyzerAngles& angles);

IntensitySet intensities(const FieldSet& fields);

}  // namespace wwspdc

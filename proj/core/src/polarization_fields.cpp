#include "wwspdc/polarization_fields.hpp"

#include <cmath>
#include <numbers>

namespace wwspdc {

double AnalyzerAngles::normalize(double angle) {
  constexpr double pi = std::numbers::pi;
  double reduced = std::fmod(angle, pi);
  if (reduced < 0.0) reduced += pi;
  if (reduced == pi) reduced = 0.0;  // fmod may round up for tiny negatives
  return reduced;
}

FieldSet partial_fields(const VacuumSample& sample, std::complex<double> gain_d,
                        const AnalyzerAngles& angles) {
  const double ct = std::cos(angles.theta());
  const double st = std::sin(angles.theta());
  const double cp = std::cos(angles.phi());
  const double sp = std::sin(angles.phi());
  const std::complex<double> i_unit{0.0, 1.0};

  FieldSet f;
  f.e_a0 = sample.a_s * ct + i_unit * sample.a_i * st;
  f.e_b0 = -i_unit * sample.a_s * sp + sample.a_i * cp;
  f.e_a1 = gain_d * (std::conj(sample.a_i) * ct + i_unit * std::conj(sample.a_s) * st);
  f.e_b1 = gain_d * (-i_unit * std::conj(sample.a_i) * sp + std::conj(sample.a_s) * cp);
  return f;
}

IntensitySet intensities(const FieldSet& fields) {
  IntensitySet out;
  out.i_a0 = std::norm(fields.e_a0);
  out.i_b0 = std::norm(fields.e_b0);
  out.i_a1 = 2.0 * (fields.e_a1 * std::conj(fields.e_a0)).real() + std::norm(fields.e_a1);
  out.i_b1 = 2.0 * (fields.e_b1 * std::conj(fields.e_b0)).real() + std::norm(fields.e_b1);
  out.i_a = std::norm(fields.e_a0 + fields.e_a1);
  out.i_b = std::norm(fields.e_b0 + fields.e_b1);
  return out;
}

}  // namespace wwspdc

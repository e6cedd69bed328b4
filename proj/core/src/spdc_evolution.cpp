#include "wwspdc/spdc_evolution.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace wwspdc {
namespace {

using State = std::array<std::complex<double>, 2>;

State pair_coupling_rhs(const State& b, std::complex<double> coupling_a) {
  const std::complex<double> minus_i{0.0, -1.0};
  return {minus_i * coupling_a * std::conj(b[1]),
          minus_i * coupling_a * std::conj(b[0])};
}

}  // namespace

std::complex<double> map_c_to_d(std::complex<double> c) {
  return c / (1.0 + 0.5 * std::norm(c));
}

void validate_gain(std::complex<double> d) {
  if (std::abs(d) >= 1.0) {
    throw std::domain_error("gain |d| must be below 1, got |d| = " +
                            std::to_string(std::abs(d)));
  }
}

bool beyond_perturbative_range(std::complex<double> d) {
  return std::abs(d) > 0.2;
}

SpdcParams make_spdc_params(std::complex<double> coupling_c, double omega_s,
                            double omega_i, double interaction_time) {
  if (omega_s < 0.0 || omega_i < 0.0) {
    throw std::invalid_argument("mode frequencies must be non-negative");
  }
  if (interaction_time < 0.0) {
    throw std::invalid_argument("interaction time must be non-negative");
  }
  SpdcParams params;
  params.coupling_c = coupling_c;
  params.gain_d = map_c_to_d(coupling_c);
  params.omega_s = omega_s;
  params.omega_i = omega_i;
  params.interaction_time = interaction_time;
  validate_gain(params.gain_d);
  return params;
}

ModeAmplitude free_evolve(ModeAmplitude a, double omega, double t) {
  return a * std::polar(1.0, -omega * t);
}

VacuumSample spdc_transform(const VacuumSample& sample, std::complex<double> gain_d) {
  return VacuumSample{sample.a_s + gain_d * std::conj(sample.a_i),
                      sample.a_i + gain_d * std::conj(sample.a_s)};
}

VacuumSample spdc_transform(const VacuumSample& sample, const SpdcParams& params) {
  return spdc_transform(sample, params.gain_d);
}

VacuumSample integrate_coupled_odes(const VacuumSample& initial,
                                    std::complex<double> coupling_a,
                                    double duration, int n_steps) {
  if (n_steps <= 0) {
    throw std::invalid_argument("integrate_coupled_odes: n_steps must be positive");
  }
  const double h = duration / static_cast<double>(n_steps);
  State b{initial.a_s, initial.a_i};
  for (int step = 0; step < n_steps; ++step) {
    const State k1 = pair_coupling_rhs(b, coupling_a);
    const State k2 = pair_coupling_rhs(
        {b[0] + 0.5 * h * k1[0], b[1] + 0.5 * h * k1[1]}, coupling_a);
    const State k3 = pair_coupling_rhs(
        {b[0] + 0.5 * h * k2[0], b[1] + 0.5 * h * k2[1]}, coupling_a);
    const State k4 =
        pair_coupling_rhs({b[0] + h * k3[0], b[1] + h * k3[1]}, coupling_a);
    for (int j = 0; j < 2; ++j) {
      b[j] += (h / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
  }
  return VacuumSample{b[0], b[1]};
}

}  // namespace wwspdc

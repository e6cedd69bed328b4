#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "wwspdc/gaussian_modes.hpp"
#include "wwspdc/polarization_fields.hpp"

using namespace wwspdc;

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

struct MomentSums {
  double i_a = 0.0;
  double i_a0 = 0.0;
  double i_a0_i_b0 = 0.0;
  double i_a_i_b = 0.0;
  double i_b = 0.0;
  cplx e_a0_e_b1 = 0.0;     // <e_a0 . e_b1>
  cplx e_a0_e_b0 = 0.0;     // <e_a0 . e_b0>
  cplx e_a0_conj_b1 = 0.0;  // <e_a0 . conj(e_b1)>
};

MomentSums run_ensemble(const VacuumSampler& sampler, cplx d,
                        const AnalyzerAngles& angles) {
  MomentSums m;
  const auto n = static_cast<std::int64_t>(sampler.size());
  for (std::int64_t k = 0; k < n; ++k) {
    const FieldSet f = partial_fields(sampler.at(k), d, angles);
    const IntensitySet i = intensities(f);
    m.i_a += i.i_a;
    m.i_a0 += i.i_a0;
    m.i_b += i.i_b;
    m.i_a0_i_b0 += i.i_a0 * i.i_b0;
    m.i_a_i_b += i.i_a * i.i_b;
    m.e_a0_e_b1 += f.e_a0 * f.e_b1;
    m.e_a0_e_b0 += f.e_a0 * f.e_b0;
    m.e_a0_conj_b1 += f.e_a0 * std::conj(f.e_b1);
  }
  const auto scale = 1.0 / static_cast<double>(n);
  m.i_a *= scale;
  m.i_a0 *= scale;
  m.i_b *= scale;
  m.i_a0_i_b0 *= scale;
  m.i_a_i_b *= scale;
  m.e_a0_e_b1 *= scale;
  m.e_a0_e_b0 *= scale;
  m.e_a0_conj_b1 *= scale;
  return m;
}

}  // namespace

TEST_CASE("angles reduce modulo pi") {
  CHECK(AnalyzerAngles::normalize(0.0) == 0.0);
  CHECK(AnalyzerAngles::normalize(kPi) == doctest::Approx(0.0));
  CHECK(AnalyzerAngles::normalize(-kPi / 4) == doctest::Approx(3 * kPi / 4));
  CHECK(AnalyzerAngles::normalize(5 * kPi / 2) == doctest::Approx(kPi / 2));
  const AnalyzerAngles angles(kPi + 0.3, -0.3);
  CHECK(angles.theta() == doctest::Approx(0.3));
  CHECK(angles.phi() == doctest::Approx(kPi - 0.3));
}

TEST_CASE("zero gain leaves only the vacuum parts") {
  const VacuumSample s{{0.4, -0.1}, {0.2, 0.7}};
  const AnalyzerAngles angles(0.3, 1.1);
  const FieldSet f = partial_fields(s, {0.0, 0.0}, angles);
  CHECK(f.e_a1 == cplx{0.0, 0.0});
  CHECK(f.e_b1 == cplx{0.0, 0.0});
  const IntensitySet i = intensities(f);
  CHECK(i.i_a1 == 0.0);
  CHECK(i.i_b1 == 0.0);
  CHECK(i.i_a == doctest::Approx(i.i_a0));
  CHECK(i.i_b == doctest::Approx(i.i_b0));
}

TEST_CASE("aligned analyzers pass single modes straight through") {
  const VacuumSample s{{0.4, -0.1}, {0.2, 0.7}};
  const cplx d{0.08, -0.02};
  const FieldSet f = partial_fields(s, d, AnalyzerAngles(0.0, 0.0));
  CHECK(f.e_a0 == s.a_s);
  CHECK(f.e_b0 == s.a_i);
  CHECK(std::abs(f.e_a1 - d * std::conj(s.a_i)) < 1e-15);
  CHECK(std::abs(f.e_b1 - d * std::conj(s.a_s)) < 1e-15);
}

TEST_CASE("crossed analyzer mixes the orthogonal mode with a quarter phase") {
  const VacuumSample s{{0.4, -0.1}, {0.2, 0.7}};
  const cplx d{0.1, 0.0};
  const FieldSet f = partial_fields(s, d, AnalyzerAngles(kPi / 2, kPi / 2));
  const cplx i_unit{0.0, 1.0};
  CHECK(std::abs(f.e_a0 - i_unit * s.a_i) < 1e-15);
  CHECK(std::abs(f.e_b0 - (-i_unit) * s.a_s) < 1e-15);
  CHECK(std::abs(f.e_a1 - d * i_unit * std::conj(s.a_s)) < 1e-15);
  CHECK(std::abs(f.e_b1 - d * (-i_unit) * std::conj(s.a_i)) < 1e-15);
}

TEST_CASE("total intensity splits into vacuum part plus pump-on excess") {
  const VacuumSample s{{0.31, -0.64}, {0.12, 0.55}};
  const cplx d{0.06, 0.08};
  const AnalyzerAngles angles(0.7, 2.1);
  const FieldSet f = partial_fields(s, d, angles);
  const IntensitySet i = intensities(f);
  CHECK(i.i_a == doctest::Approx(std::norm(f.e_a0 + f.e_a1)).epsilon(1e-12));
  CHECK(i.i_b == doctest::Approx(std::norm(f.e_b0 + f.e_b1)).epsilon(1e-12));
  CHECK(i.i_a0 + i.i_a1 == doctest::Approx(i.i_a).epsilon(1e-12));
  CHECK(i.i_b0 + i.i_b1 == doctest::Approx(i.i_b).epsilon(1e-12));
  // The excess can be negative sample-by-sample; only its mean is a rate.
  CHECK(i.i_a0 >= 0.0);
  CHECK(i.i_b0 >= 0.0);
}

TEST_CASE("station A fields never depend on the remote analyzer") {
  const VacuumSample s{{0.31, -0.64}, {0.12, 0.55}};
  const cplx d{0.06, 0.08};
  const FieldSet near = partial_fields(s, d, AnalyzerAngles(0.7, 0.1));
  for (double phi : {0.0, 0.4, 1.3, 2.9}) {
    const FieldSet far = partial_fields(s, d, AnalyzerAngles(0.7, phi));
    // Bitwise equality: the A-side expressions never read phi.
    CHECK(far.e_a0 == near.e_a0);
    CHECK(far.e_a1 == near.e_a1);
  }
  const FieldSet tilted = partial_fields(s, d, AnalyzerAngles(1.5, 0.1));
  for (double theta : {0.0, 0.4, 1.3, 2.9}) {
    const FieldSet far = partial_fields(s, d, AnalyzerAngles(theta, 0.1));
    CHECK(far.e_b0 == tilted.e_b0);
    CHECK(far.e_b1 == tilted.e_b1);
  }
}

TEST_CASE("ensemble moments match the gaussian closed forms") {
  SamplerConfig cfg;
  cfg.seed = 77;
  cfg.n_samples = 400'000;
  const VacuumSampler sampler(cfg);
  const cplx d{0.06, -0.08};  // |d| = 0.1
  const double theta = 0.5;
  const double phi = 1.2;
  const AnalyzerAngles angles(theta, phi);
  const MomentSums m = run_ensemble(sampler, d, angles);

  const double se = 1.0 / std::sqrt(static_cast<double>(cfg.n_samples));

  // <i_a> = (1 + |d|^2)/2, <i_a0> = 1/2 independent of the angles.
  CHECK(std::abs(m.i_a - 0.5 * (1.0 + std::norm(d))) < 5 * se);
  CHECK(std::abs(m.i_a0 - 0.5) < 5 * se);
  CHECK(std::abs(m.i_b - 0.5 * (1.0 + std::norm(d))) < 5 * se);

  // Vacuum-pair moment: 1/4 + sin^2(theta + phi)/4.
  const double pair0 = 0.25 + 0.25 * std::pow(std::sin(theta + phi), 2);
  CHECK(std::abs(m.i_a0_i_b0 - pair0) < 5 * se);

  // Cross amplitude <e_a0 e_b1> = (d/2) cos(theta - phi).
  const cplx cross = 0.5 * d * std::cos(theta - phi);
  CHECK(std::abs(m.e_a0_e_b1 - cross) < 5 * se);

  // Nil moments: vacuum parts of different stations, and a0 against conj(b1).
  CHECK(std::abs(m.e_a0_e_b0) < 5 * se);
  CHECK(std::abs(m.e_a0_conj_b1) < 5 * se);
}

TEST_CASE("intensity product follows the gaussian pairing identity") {
  SamplerConfig cfg;
  cfg.seed = 99;
  cfg.n_samples = 400'000;
  const VacuumSampler sampler(cfg);
  const cplx d{0.1, 0.0};
  const double theta = 0.4;
  const double phi = 0.9;
  const MomentSums m = run_ensemble(sampler, d, AnalyzerAngles(theta, phi));

  // For jointly gaussian fields:
  // <I_A I_B> = <I_A><I_B> + |<E_A E_B*>|^2 + |<E_A E_B>|^2 with
  // <E_A E_B> = d cos(theta - phi),
  // <E_A E_B*> = (i/2)(1 + |d|^2) sin(theta + phi).
  const double dd = std::norm(d);
  const double mean_i = 0.5 * (1.0 + dd);
  const double anomalous = std::norm(d) * std::pow(std::cos(theta - phi), 2);
  const double normal =
      0.25 * std::pow((1.0 + dd) * std::sin(theta + phi), 2);
  const double expected = mean_i * mean_i + anomalous + normal;
  const double se = 1.0 / std::sqrt(static_cast<double>(cfg.n_samples));
  CHECK(std::abs(m.i_a_i_b - expected) < 8 * se);
}

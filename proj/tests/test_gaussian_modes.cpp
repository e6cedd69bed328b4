#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "wwspdc/gaussian_modes.hpp"
#include "wwspdc/rng.hpp"

using namespace wwspdc;

namespace {

// |observed - expected| within k standard errors, with a floor that keeps
// exact-zero errors from turning the check into equality.
bool within_se(double observed, double expected, double se, double k = 5.0) {
  return std::abs(observed - expected) <= k * se + 1e-12;
}

}  // namespace

TEST_CASE("philox4x32-10 reproduces published test vectors") {
  // Known-answer vectors from the reference implementation's test suite.
  const auto zero = philox4x32_10({0u, 0u, 0u, 0u}, {0u, 0u});
  CHECK(zero[0] == 0x6627e8d5u);
  CHECK(zero[1] == 0xe169c58du);
  CHECK(zero[2] == 0xbc57ac4cu);
  CHECK(zero[3] == 0x9b00dbd8u);

  const auto ones = philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                  {0xffffffffu, 0xffffffffu});
  CHECK(ones[0] == 0x408f276du);
  CHECK(ones[1] == 0x41c83b0eu);
  CHECK(ones[2] == 0xa20bc7c6u);
  CHECK(ones[3] == 0x6d5451fdu);

  const auto pi = philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                                {0xa4093822u, 0x299f31d0u});
  CHECK(pi[0] == 0xd16cfe09u);
  CHECK(pi[1] == 0x94fdccebu);
  CHECK(pi[2] == 0x5001e420u);
  CHECK(pi[3] == 0x24126ea1u);
}

TEST_CASE("sampler config validation") {
  CHECK_THROWS_AS(validate(SamplerConfig{1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(validate(SamplerConfig{1, -5, 2}), std::invalid_argument);
  CHECK_THROWS_AS(validate(SamplerConfig{1, 100, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate(SamplerConfig{1, 10, 20}), std::invalid_argument);
  CHECK_NOTHROW(validate(SamplerConfig{1, 100, 2}));
  CHECK_THROWS_AS(VacuumSampler(SamplerConfig{1, 0, 2}), std::invalid_argument);
}

TEST_CASE("stream is deterministic and random-access") {
  const SamplerConfig cfg{42, 1000, 10};
  const VacuumSampler a = sample_vacuum(cfg);
  const VacuumSampler b = sample_vacuum(cfg);
  for (std::int64_t k : {0, 1, 17, 999}) {
    CHECK(a.at(k).a_s == b.at(k).a_s);
    CHECK(a.at(k).a_i == b.at(k).a_i);
  }
  // Visiting out of order must not change anything.
  const VacuumSample late_first = a.at(999);
  const VacuumSample early = a.at(0);
  CHECK(late_first.a_s == b.at(999).a_s);
  CHECK(early.a_i == b.at(0).a_i);

  const VacuumSampler other_seed = sample_vacuum(SamplerConfig{43, 1000, 10});
  CHECK(a.at(0).a_s != other_seed.at(0).a_s);
  CHECK(a.rng_id() == std::string_view("philox4x32-10+box-muller/v1"));
}

TEST_CASE("vacuum second and fourth moments match the ensemble") {
  const VacuumSampler sampler = sample_vacuum(SamplerConfig{7, 1'000'000, 100});

  const ComplexEstimate m11 = empirical_moment(sampler, 1, 1, Mode::s);
  CHECK(within_se(m11.re.mean, 0.5, m11.re.std_error));
  CHECK(within_se(m11.im.mean, 0.0, m11.im.std_error));
  CHECK(m11.re.std_error == doctest::Approx(0.0005).epsilon(0.5));

  const ComplexEstimate m22 = empirical_moment(sampler, 2, 2, Mode::i);
  CHECK(within_se(m22.re.mean, 0.5, m22.re.std_error));
  CHECK(within_se(m22.im.mean, 0.0, m22.im.std_error));

  const ComplexEstimate m33 = empirical_moment(sampler, 3, 3, Mode::s);
  CHECK(within_se(m33.re.mean, exact_vacuum_moment(3), m33.re.std_error));
  CHECK(exact_vacuum_moment(3) == doctest::Approx(0.75));
}

TEST_CASE("off-diagonal vacuum moments vanish") {
  const VacuumSampler sampler = sample_vacuum(SamplerConfig{11, 1'000'000, 100});
  const int pairs[][2] = {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {2, 1}, {3, 1}};
  for (const auto& nm : pairs) {
    const ComplexEstimate m = empirical_moment(sampler, nm[0], nm[1], Mode::s);
    CAPTURE(nm[0]);
    CAPTURE(nm[1]);
    CHECK(within_se(m.re.mean, 0.0, m.re.std_error));
    CHECK(within_se(m.im.mean, 0.0, m.im.std_error));
  }
}

TEST_CASE("modes are uncorrelated") {
  const VacuumSampler sampler = sample_vacuum(SamplerConfig{13, 400'000, 100});
  const auto& cfg = sampler.config();
  std::vector<double> batch(static_cast<std::size_t>(cfg.n_batches));
  for (std::int64_t b = 0; b < cfg.n_batches; ++b) {
    const auto [first, last] = batch_range(cfg.n_samples, cfg.n_batches, b);
    double sum = 0.0;
    for (std::int64_t k = first; k < last; ++k) {
      const VacuumSample s = sampler.at(k);
      sum += std::norm(s.a_s) * std::norm(s.a_i);
    }
    batch[static_cast<std::size_t>(b)] = sum / static_cast<double>(last - first);
  }
  const RateEstimate joint = aggregate_batch_means(batch, cfg.n_samples);
  CHECK(within_se(joint.mean, 0.25, joint.std_error));
}

TEST_CASE("quadrature variances are 1/4 and quadratures uncorrelated") {
  const VacuumSampler sampler = sample_vacuum(SamplerConfig{17, 400'000, 100});
  double sum_rr = 0.0, sum_ii = 0.0, sum_ri = 0.0;
  const std::int64_t n = sampler.size();
  for (std::int64_t k = 0; k < n; ++k) {
    const VacuumSample s = sampler.at(k);
    sum_rr += s.a_s.real() * s.a_s.real();
    sum_ii += s.a_s.imag() * s.a_s.imag();
    sum_ri += s.a_s.real() * s.a_s.imag();
  }
  const double nd = static_cast<double>(n);
  CHECK(sum_rr / nd == doctest::Approx(0.25).epsilon(0.02));
  CHECK(sum_ii / nd == doctest::Approx(0.25).epsilon(0.02));
  CHECK(std::abs(sum_ri / nd) < 0.002);
}

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "wwspdc/spdc_evolution.hpp"

using namespace wwspdc;

namespace {

using cplx = std::complex<double>;

// Exact rotating-frame solution of the pair equations:
// b_s(T) = cosh(|A|T) b_s(0) - i (A/|A|) sinh(|A|T) conj(b_i(0)).
VacuumSample exact_pair_solution(const VacuumSample& b0, cplx coupling_a,
                                 double t) {
  const double mag = std::abs(coupling_a);
  if (mag == 0.0) return b0;
  const cplx phase = coupling_a / mag;
  const double ch = std::cosh(mag * t);
  const double sh = std::sinh(mag * t);
  const cplx minus_i{0.0, -1.0};
  return VacuumSample{ch * b0.a_s + minus_i * phase * sh * std::conj(b0.a_i),
                      ch * b0.a_i + minus_i * phase * sh * std::conj(b0.a_s)};
}

double map_error_vs_closed_form(cplx coupling_a, double t, int n_steps) {
  // The map is linear in (b_s, conj(b_i)); unit starts read off its columns.
  const VacuumSample e1 = integrate_coupled_odes({1.0, 0.0}, coupling_a, t, n_steps);
  const VacuumSample e2 = integrate_coupled_odes({0.0, 1.0}, coupling_a, t, n_steps);
  const cplx c = coupling_a * t;
  const cplx alpha_closed = 1.0 + 0.5 * std::norm(c);
  const cplx beta_closed = cplx{0.0, -1.0} * c;
  return std::max(std::abs(e1.a_s - alpha_closed), std::abs(e2.a_s - beta_closed));
}

}  // namespace

TEST_CASE("gain map scales and preserves phase") {
  CHECK(std::abs(map_c_to_d({0.0, 0.0})) == 0.0);
  CHECK(map_c_to_d({0.1, 0.0}).real() == doctest::Approx(0.09950248756218906));
  CHECK(map_c_to_d({0.1, 0.0}).imag() == 0.0);

  const cplx c{0.06, -0.08};
  const cplx d = map_c_to_d(c);
  CHECK(std::abs(d) == doctest::Approx(0.1 / 1.005));
  CHECK(std::arg(d) == doctest::Approx(std::arg(c)));
  // Odd map: flipping the coupling flips the gain.
  CHECK(map_c_to_d(-c) == -d);
}

TEST_CASE("gain validation and perturbative warning threshold") {
  CHECK_NOTHROW(validate_gain({0.5, 0.5}));
  CHECK_THROWS_AS(validate_gain({1.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(validate_gain({0.8, 0.8}), std::domain_error);
  CHECK_FALSE(beyond_perturbative_range({0.2, 0.0}));
  CHECK(beyond_perturbative_range({0.21, 0.0}));
  // The gain map never reaches the amplification bound.
  CHECK(std::abs(map_c_to_d({100.0, 0.0})) < 1.0);
  CHECK_NOTHROW(make_spdc_params({100.0, 0.0}, 1.0, 1.0, 1.0));
}

TEST_CASE("spdc params derive the gain and match frequencies") {
  const SpdcParams p = make_spdc_params({0.1, 0.0}, 2.2, 1.8, 3.0);
  CHECK(p.gain_d.real() == doctest::Approx(0.09950248756218906));
  CHECK(p.omega_p() == doctest::Approx(4.0));
  CHECK_THROWS_AS(make_spdc_params({0.1, 0.0}, -1.0, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_spdc_params({0.1, 0.0}, 1.0, 1.0, -1.0),
                  std::invalid_argument);
}

TEST_CASE("free evolution rotates the amplitude") {
  const ModeAmplitude a{0.3, -0.4};
  CHECK(free_evolve(a, 2.0, 0.0) == a);
  const ModeAmplitude quarter = free_evolve({1.0, 0.0}, 1.0, std::numbers::pi / 2);
  CHECK(quarter.real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(quarter.imag() == doctest::Approx(-1.0));
  const ModeAmplitude full = free_evolve(a, 3.0, 2.0 * std::numbers::pi / 3.0);
  CHECK(full.real() == doctest::Approx(a.real()));
  CHECK(full.imag() == doctest::Approx(a.imag()));
}

TEST_CASE("production transform mixes conjugate partners") {
  const VacuumSample s{{1.0, 0.0}, {0.0, 0.0}};
  const VacuumSample out = spdc_transform(s, cplx{0.1, 0.0});
  CHECK(out.a_s.real() == doctest::Approx(1.0));
  CHECK(out.a_i.real() == doctest::Approx(0.1));

  const VacuumSample idle = spdc_transform(s, cplx{0.0, 0.0});
  CHECK(idle.a_s == s.a_s);
  CHECK(idle.a_i == s.a_i);

  // Linearity in the input sample.
  const VacuumSample x{{0.2, -0.7}, {0.5, 0.1}};
  const VacuumSample y{{-1.1, 0.4}, {0.3, 0.9}};
  const cplx d{0.05, 0.02};
  const VacuumSample sum{x.a_s + y.a_s, x.a_i + y.a_i};
  const VacuumSample lhs = spdc_transform(sum, d);
  const VacuumSample rhs_x = spdc_transform(x, d);
  const VacuumSample rhs_y = spdc_transform(y, d);
  CHECK(std::abs(lhs.a_s - (rhs_x.a_s + rhs_y.a_s)) < 1e-15);
  CHECK(std::abs(lhs.a_i - (rhs_x.a_i + rhs_y.a_i)) < 1e-15);

  const SpdcParams p = make_spdc_params({0.1, 0.0}, 1.0, 1.0, 1.0);
  const VacuumSample via_params = spdc_transform(s, p);
  CHECK(via_params.a_i.real() == doctest::Approx(p.gain_d.real()));
}

TEST_CASE("zero coupling leaves the rotating frame static") {
  const VacuumSample b0{{0.4, -0.2}, {-0.9, 0.1}};
  const VacuumSample out = integrate_coupled_odes(b0, {0.0, 0.0}, 5.0, 64);
  CHECK(std::abs(out.a_s - b0.a_s) < 1e-10);
  CHECK(std::abs(out.a_i - b0.a_i) < 1e-10);
  CHECK_THROWS_AS(integrate_coupled_odes(b0, {0.1, 0.0}, 1.0, 0),
                  std::invalid_argument);
}

TEST_CASE("integrated map matches the closed form within cubic remainder") {
  const cplx a{0.1, 0.0};
  const double err = map_error_vs_closed_form(a, 1.0, 10'000);
  // The closed form truncates sinh at first order: gap sinh(0.1) - 0.1.
  const double expected_gap = std::sinh(0.1) - 0.1;
  CHECK(err < 1e-3);
  CHECK(err == doctest::Approx(expected_gap).epsilon(1e-6));

  // Complex coupling keeps the same gap.
  const double err_rot = map_error_vs_closed_form({0.06, 0.08}, 1.0, 10'000);
  CHECK(err_rot < 1e-3);
}

TEST_CASE("integrator matches the exact hyperbolic solution") {
  const VacuumSample b0{{0.7, 0.2}, {-0.3, 0.5}};
  const cplx a{0.08, -0.06};
  const VacuumSample num = integrate_coupled_odes(b0, a, 1.0, 10'000);
  const VacuumSample exact = exact_pair_solution(b0, a, 1.0);
  CHECK(std::abs(num.a_s - exact.a_s) < 1e-9);
  CHECK(std::abs(num.a_i - exact.a_i) < 1e-9);
}

TEST_CASE("rotating-frame population difference is conserved") {
  const VacuumSample b0{{0.7, 0.2}, {-0.3, 0.5}};
  const double before = std::norm(b0.a_s) - std::norm(b0.a_i);
  const VacuumSample out = integrate_coupled_odes(b0, {0.1, 0.0}, 1.0, 10'000);
  const double after = std::norm(out.a_s) - std::norm(out.a_i);
  CHECK(std::abs(after - before) < 1e-8);
}

TEST_CASE("step halving shows fourth-order convergence") {
  const VacuumSample b0{{1.0, 0.0}, {0.5, -0.5}};
  const cplx a{0.8, 0.0};
  auto error_at = [&](int steps) {
    const VacuumSample num = integrate_coupled_odes(b0, a, 1.0, steps);
    const VacuumSample exact = exact_pair_solution(b0, a, 1.0);
    return std::hypot(std::abs(num.a_s - exact.a_s), std::abs(num.a_i - exact.a_i));
  };
  const double e8 = error_at(8);
  const double e16 = error_at(16);
  const double e32 = error_at(32);
  const double order_a = std::log2(e8 / e16);
  const double order_b = std::log2(e16 / e32);
  CHECK(order_a == doctest::Approx(4.0).epsilon(0.05));
  CHECK(order_b == doctest::Approx(4.0).epsilon(0.05));
}

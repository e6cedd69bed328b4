#include "wwspdc/fock_oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace wwspdc {
namespace {

Eigen::MatrixXcd single_mode_annihilator(int cutoff) {
  const int n = cutoff + 1;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k <= cutoff; ++k) {
    a(k - 1, k) = std::sqrt(static_cast<double>(k));
  }
  return a;
}

}  // namespace

TruncatedSpace::TruncatedSpace(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 2) {
    throw std::invalid_argument("TruncatedSpace: cutoff must be at least 2, got " +
                                std::to_string(cutoff));
  }
  const int n = cutoff + 1;
  dim_ = n * n;
  const Eigen::MatrixXcd a = single_mode_annihilator(cutoff);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  a_s_ = Eigen::kroneckerProduct(a, id);
  a_i_ = Eigen::kroneckerProduct(id, a);
}

const Eigen::MatrixXcd& TruncatedSpace::annihilator(Mode mode) const {
  return mode == Mode::s ? a_s_ : a_i_;
}

Eigen::MatrixXcd TruncatedSpace::creator(Mode mode) const {
  return annihilator(mode).adjoint();
}

Eigen::VectorXcd TruncatedSpace::vacuum_state() const {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim_);
  v(0) = 1.0;
  return v;
}

Eigen::MatrixXcd TruncatedSpace::matrix(const LadderOp& op) const {
  return op.kind == Ladder::annihilate ? annihilator(op.mode) : creator(op.mode);
}

FieldOperatorSet build_field_operators(const TruncatedSpace& space,
                                       std::complex<double> gain_d,
                                       const AnalyzerAngles& angles) {
  const double ct = std::cos(angles.theta());
  const double st = std::sin(angles.theta());
  const double cp = std::cos(angles.phi());
  const double sp = std::sin(angles.phi());
  const std::complex<double> i_unit{0.0, 1.0};

  const Eigen::MatrixXcd& a_s = space.annihilator(Mode::s);
  const Eigen::MatrixXcd& a_i = space.annihilator(Mode::i);
  const Eigen::MatrixXcd ad_s = space.creator(Mode::s);
  const Eigen::MatrixXcd ad_i = space.creator(Mode::i);

  FieldOperatorSet set;
  set.e_a0 = {"E_A0+", a_s * ct + i_unit * a_i * st};
  set.e_a1 = {"E_A1+", gain_d * (ad_i * ct + i_unit * ad_s * st)};
  set.e_b0 = {"E_B0+", -i_unit * a_s * sp + a_i * cp};
  set.e_b1 = {"E_B1+", gain_d * (-i_unit * ad_i * sp + ad_s * cp)};
  return set;
}

double single_rate(const TruncatedSpace& space, std::complex<double> gain_d,
                   const AnalyzerAngles& angles) {
  const FieldOperatorSet ops = build_field_operators(space, gain_d, angles);
  const Eigen::VectorXcd v = ops.e_a_plus() * space.vacuum_state();
  return v.squaredNorm();
}

double coincidence_rate(const TruncatedSpace& space, std::complex<double> gain_d,
                        const AnalyzerAngles& angles) {
  const FieldOperatorSet ops = build_field_operators(space, gain_d, angles);
  const Eigen::VectorXcd vac = space.vacuum_state();
  const Eigen::VectorXcd ba = ops.e_b_plus() * (ops.e_a_plus() * vac);
  const Eigen::VectorXcd ab = ops.e_a_plus() * (ops.e_b_plus() * vac);
  return 0.5 * ba.squaredNorm() + 0.5 * ab.squaredNorm();
}

std::complex<double> expectation_on_vacuum(const TruncatedSpace& space,
                                           const OperatorWord& word) {
  const auto max_len = static_cast<std::size_t>(2 * space.cutoff());
  if (word.factors.size() > max_len) {
    throw std::invalid_argument(
        "expectation_on_vacuum: word length " +
        std::to_string(word.factors.size()) + " exceeds 2*cutoff = " +
        std::to_string(max_len) + "; raise the cutoff");
  }
  Eigen::VectorXcd v = space.vacuum_state();
  for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it) {
    v = space.matrix(*it) * v;
  }
  return word.coefficient * v(0);
}

}  // namespace wwspdc

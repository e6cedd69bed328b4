#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "wwspdc/mode.hpp"
#include "wwspdc/polarization_fields.hpp"
#include "wwspdc/ww_algebra.hpp"

namespace wwspdc {

/**
 * Two-mode number basis truncated at a per-mode occupation cutoff.
 *
 * States are ordered signal-major: index = n_s * (cutoff + 1) + n_i.
 * Vacuum expectations of operator words are exact as long as the word is no
 * longer than 2 * cutoff, since contributing paths never climb above
 * cutoff quanta in either mode.
 */
class TruncatedSpace {
 public:
  explicit TruncatedSpace(int cutoff = 3);

  int cutoff() const { return cutoff_; }
  int dim() const { return dim_; }

  const Eigen::MatrixXcd& annihilator(Mode mode) const;
  Eigen::MatrixXcd creator(Mode mode) const;
  Eigen::VectorXcd vacuum_state() const;

  Eigen::MatrixXcd matrix(const LadderOp& op) const;

 private:
  int cutoff_;
  int dim_;
  Eigen::MatrixXcd a_s_;
  Eigen::MatrixXcd a_i_;
};

struct FieldOperator {
  std::string label;
  Eigen::MatrixXcd matrix;
};

/** Positive-frequency station operators; e_x0 is gain-free, e_x1 carries one gain factor. */
struct FieldOperatorSet {
  FieldOperator e_a0;
  FieldOperator e_a1;
  FieldOperator e_b0;
  FieldOperator e_b1;

  Eigen::MatrixXcd e_a_plus() const { return e_a0.matrix + e_a1.matrix; }
  Eigen::MatrixXcd e_b_plus() const { return e_b0.matrix + e_b1.matrix; }
};

FieldOperatorSet build_field_operators(const TruncatedSpace& space,
                                       std::complex<double> gain_d,
                                       const AnalyzerAngles& angles);

/** <0| E_A^- E_A^+ |0>; equals |d|^2 exactly at any cutoff >= 2. */
double single_rate(const TruncatedSpace& space, std::complex<double> gain_d,
                   const AnalyzerAngles& angles);

/**
 * Symmetrized normally ordered coincidence rate
 * (1/2) <0| E_A^- E_B^- E_B^+ E_A^+ |0> + (1/2) <0| E_B^- E_A^- E_A^+ E_B^+ |0>.
 *
 * Equals |d|^2 cos^2(theta - phi) up to an O(|d|^4) remainder.
 */
double coincidence_rate(const TruncatedSpace& space, std::complex<double> gain_d,
                        const AnalyzerAngles& angles);

/**
 * <0| word |0> by dense matrix application.
 *
 * Throws std::invalid_argument when the word is longer than 2 * cutoff.
 */
std::complex<double> expectation_on_vacuum(const TruncatedSpace& space,
                                           const OperatorWord& word);

}  // namespace wwspdc

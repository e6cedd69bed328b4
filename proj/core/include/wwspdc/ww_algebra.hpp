#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "wwspdc/mode.hpp"

namespace wwspdc {

enum class Ladder { annihilate, create };

struct LadderOp {
  Mode mode;
  Ladder kind;
  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

/**
 * Scalar multiple of an ordered product of ladder operators.
 *
 * factors[0] is the leftmost operator in the product.
 */
struct OperatorWord {
  std::complex<double> coefficient{1.0, 0.0};
  std::vector<LadderOp> factors;
};

/** Hermitian adjoint: reversed factor order, flipped kinds, conjugated coefficient. */
OperatorWord adjoint(const OperatorWord& word);

/** Exponents of one monomial a_s^n_s conj(a_s)^m_s a_i^n_i conj(a_i)^m_i. */
struct PhaseSpaceExponent {
  int n_s = 0;
  int m_s = 0;
  int n_i = 0;
  int m_i = 0;
  friend auto operator<=>(const PhaseSpaceExponent&,
                          const PhaseSpaceExponent&) = default;
};

/**
 * Polynomial in the two mode amplitudes and their conjugates.
 *
 * Terms are kept in a map ordered lexicographically by exponent; monomials
 * whose coefficient cancels to exactly zero are dropped.
 */
class WwPolynomial {
 public:
  WwPolynomial() = default;

  static WwPolynomial constant(std::complex<double> value);
  /** Single variable: a_mode (conjugated = false) or conj(a_mode). */
  static WwPolynomial variable(Mode mode, bool conjugated);

  WwPolynomial& operator+=(const WwPolynomial& other);
  WwPolynomial& operator-=(const WwPolynomial& other);
  WwPolynomial& operator*=(std::complex<double> scale);
  friend WwPolynomial operator+(WwPolynomial lhs, const WwPolynomial& rhs);
  friend WwPolynomial operator-(WwPolynomial lhs, const WwPolynomial& rhs);
  friend WwPolynomial operator*(WwPolynomial lhs, std::complex<double> scale);
  friend WwPolynomial operator*(const WwPolynomial& lhs, const WwPolynomial& rhs);

  /** Multiplies by a_mode or conj(a_mode). */
  WwPolynomial times_variable(Mode mode, bool conjugated) const;

  /** Formal Wirtinger derivative with respect to a_mode or conj(a_mode). */
  WwPolynomial derivative(Mode mode, bool wrt_conjugate) const;

  /** Complex conjugate: coefficients conjugated, n and m exponents swapped. */
  WwPolynomial conjugated() const;

  std::complex<double> coefficient(const PhaseSpaceExponent& e) const;
  const std::map<PhaseSpaceExponent, std::complex<double>>& terms() const {
    return terms_;
  }
  bool empty() const { return terms_.empty(); }

  /** Canonical rendering, terms in ascending lexicographic exponent order. */
  std::string to_string() const;

 private:
  void add_term(const PhaseSpaceExponent& e, std::complex<double> c);

  std::map<PhaseSpaceExponent, std::complex<double>> terms_;
};

bool approx_equal(const WwPolynomial& a, const WwPolynomial& b, double tol);

/**
 * Weyl symbol of an operator word.
 *
 * Built by appending factors on the right: appending an annihilator maps
 * P -> P*a - (1/2) dP/dconj(a), appending a creator maps
 * P -> P*conj(a) + (1/2) dP/da. Distinct modes commute.
 */
WwPolynomial weyl_symbol(const OperatorWord& word);

/**
 * Expectation of a polynomial over the vacuum Wigner ensemble.
 *
 * Monomials factor over modes; <a^n conj(a)^m> is 0 for n != m and
 * n! / 2^n for n == m.
 */
std::complex<double> vacuum_expectation(const WwPolynomial& p);

/** Vacuum expectation of a word, via its Weyl symbol. */
std::complex<double> operator_vacuum_expectation(const OperatorWord& word);

}  // namespace wwspdc

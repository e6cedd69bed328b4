#include "wwspdc/ww_algebra.hpp"

#include <algorithm>
#include <charconv>

#include "wwspdc/gaussian_modes.hpp"

namespace wwspdc {
namespace {

int& exponent_slot(PhaseSpaceExponent& e, Mode mode, bool conjugated) {
  if (mode == Mode::s) return conjugated ? e.m_s : e.n_s;
  return conjugated ? e.m_i : e.n_i;
}

int exponent_of(const PhaseSpaceExponent& e, Mode mode, bool conjugated) {
  if (mode == Mode::s) return conjugated ? e.m_s : e.n_s;
  return conjugated ? e.m_i : e.n_i;
}

void append_number(std::string& out, double v) {
  if (v == 0.0) v = 0.0;  // render -0 as 0
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

void append_power(std::string& out, const char* name, int power) {
  if (power == 0) return;
  out += ' ';
  out += name;
  if (power > 1) {
    out += '^';
    out += std::to_string(power);
  }
}

}  // namespace

OperatorWord adjoint(const OperatorWord& word) {
  OperatorWord out;
  out.coefficient = std::conj(word.coefficient);
  out.factors.reserve(word.factors.size());
  for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it) {
    out.factors.push_back(LadderOp{
        it->mode,
        it->kind == Ladder::create ? Ladder::annihilate : Ladder::create});
  }
  return out;
}

WwPolynomial WwPolynomial::constant(std::complex<double> value) {
  WwPolynomial p;
  p.add_term(PhaseSpaceExponent{}, value);
  return p;
}

WwPolynomial WwPolynomial::variable(Mode mode, bool conjugated) {
  WwPolynomial p;
  PhaseSpaceExponent e;
  exponent_slot(e, mode, conjugated) = 1;
  p.add_term(e, {1.0, 0.0});
  return p;
}

void WwPolynomial::add_term(const PhaseSpaceExponent& e, std::complex<double> c) {
  if (c == std::complex<double>{0.0, 0.0}) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == std::complex<double>{0.0, 0.0}) terms_.erase(it);
  }
}

WwPolynomial& WwPolynomial::operator+=(const WwPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

WwPolynomial& WwPolynomial::operator-=(const WwPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

WwPolynomial& WwPolynomial::operator*=(std::complex<double> scale) {
  if (scale == std::complex<double>{0.0, 0.0}) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scale;
  return *this;
}

WwPolynomial operator+(WwPolynomial lhs, const WwPolynomial& rhs) {
  lhs += rhs;
  return lhs;
}

WwPolynomial operator-(WwPolynomial lhs, const WwPolynomial& rhs) {
  lhs -= rhs;
  return lhs;
}

WwPolynomial operator*(WwPolynomial lhs, std::complex<double> scale) {
  lhs *= scale;
  return lhs;
}

WwPolynomial operator*(const WwPolynomial& lhs, const WwPolynomial& rhs) {
  WwPolynomial out;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      const PhaseSpaceExponent e{ea.n_s + eb.n_s, ea.m_s + eb.m_s,
                                 ea.n_i + eb.n_i, ea.m_i + eb.m_i};
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

WwPolynomial WwPolynomial::times_variable(Mode mode, bool conjugated) const {
  WwPolynomial out;
  for (const auto& [e, c] : terms_) {
    PhaseSpaceExponent shifted = e;
    ++exponent_slot(shifted, mode, conjugated);
    out.add_term(shifted, c);
  }
  return out;
}

WwPolynomial WwPolynomial::derivative(Mode mode, bool wrt_conjugate) const {
  WwPolynomial out;
  for (const auto& [e, c] : terms_) {
    const int power = exponent_of(e, mode, wrt_conjugate);
    if (power == 0) continue;
    PhaseSpaceExponent lowered = e;
    --exponent_slot(lowered, mode, wrt_conjugate);
    out.add_term(lowered, c * static_cast<double>(power));
  }
  return out;
}

WwPolynomial WwPolynomial::conjugated() const {
  WwPolynomial out;
  for (const auto& [e, c] : terms_) {
    out.add_term(PhaseSpaceExponent{e.m_s, e.n_s, e.m_i, e.n_i}, std::conj(c));
  }
  return out;
}

std::complex<double> WwPolynomial::coefficient(const PhaseSpaceExponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? std::complex<double>{0.0, 0.0} : it->second;
}

std::string WwPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += '(';
    append_number(out, c.real());
    out += ',';
    append_number(out, c.imag());
    out += ')';
    append_power(out, "as", e.n_s);
    append_power(out, "as*", e.m_s);
    append_power(out, "ai", e.n_i);
    append_power(out, "ai*", e.m_i);
  }
  return out;
}

bool approx_equal(const WwPolynomial& a, const WwPolynomial& b, double tol) {
  const WwPolynomial diff = a - b;
  return std::all_of(diff.terms().begin(), diff.terms().end(),
                     [tol](const auto& term) {
                       return std::abs(term.second) <= tol;
                     });
}

WwPolynomial weyl_symbol(const OperatorWord& word) {
  WwPolynomial p = WwPolynomial::constant(word.coefficient);
  for (const LadderOp& op : word.factors) {
    const bool creator = (op.kind == Ladder::create);
    // Right-append rules: annihilator P -> P a - (1/2) dP/dconj(a),
    // creator P -> P conj(a) + (1/2) dP/da.
    WwPolynomial next = p.times_variable(op.mode, creator);
    WwPolynomial correction =
        p.derivative(op.mode, /*wrt_conjugate=*/!creator) * 0.5;
    if (creator) {
      next += correction;
    } else {
      next -= correction;
    }
    p = std::move(next);
  }
  return p;
}

std::complex<double> vacuum_expectation(const WwPolynomial& p) {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [e, c] : p.terms()) {
    if (e.n_s != e.m_s || e.n_i != e.m_i) continue;
    sum += c * exact_vacuum_moment(e.n_s) * exact_vacuum_moment(e.n_i);
  }
  return sum;
}

std::complex<double> operator_vacuum_expectation(const OperatorWord& word) {
  return vacuum_expectation(weyl_symbol(word));
}

}  // namespace wwspdc

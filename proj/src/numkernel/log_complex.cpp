#include "zlab/log_complex.hpp"

#include <algorithm>
#include <cmath>

#include "zlab/error.hpp"

namespace zlab {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::indeterminate: return "indeterminate";
    case ErrorCode::domain: return "domain";
    case ErrorCode::singularity: return "singularity";
    case ErrorCode::degenerate: return "degenerate";
    case ErrorCode::invalid_spec: return "invalid-spec";
    case ErrorCode::unsupported_form: return "unsupported-form";
    case ErrorCode::target_mismatch: return "target-mismatch";
    case ErrorCode::no_root: return "no-root";
    case ErrorCode::invalid_theta: return "invalid-theta";
    case ErrorCode::newton_divergence: return "newton-divergence";
    case ErrorCode::infeasible_target: return "infeasible-target";
    case ErrorCode::empty_subsequence: return "empty-subsequence";
    case ErrorCode::inconsistent_target: return "inconsistent-target";
    case ErrorCode::config: return "config";
  }
  return "unknown";
}

double normalize_angle(double theta) noexcept {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

long double normalize_angle(long double theta) noexcept {
  constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  long double r = std::fmod(theta, two_pi);
  if (r < 0.0L) r += two_pi;
  if (r >= two_pi) r = 0.0L;
  return r;
}

double wrap_difference(double a, double b) noexcept {
  double d = std::remainder(a - b, kTwoPi);
  if (d <= -std::numbers::pi) d += kTwoPi;
  return d;
}

LogComplex LogComplex::from_log_polar(double t, double theta) noexcept {
  if (t == -std::numeric_limits<double>::infinity()) return zero();
  if (t == std::numeric_limits<double>::infinity()) return infinity();
  return LogComplex(t, normalize_angle(theta));
}

LogComplex LogComplex::from_cartesian(std::complex<double> w) noexcept {
  if (std::isinf(w.real()) || std::isinf(w.imag())) return infinity();
  if (w == std::complex<double>{}) return zero();
  return LogComplex(std::log(std::abs(w)), normalize_angle(std::arg(w)));
}

std::complex<double> LogComplex::to_cartesian() const noexcept {
  switch (kind()) {
    case Kind::zero: return {};
    case Kind::infinity: return {std::numeric_limits<double>::infinity(), 0.0};
    case Kind::finite: break;
  }
  const double r = std::exp(t_);
  return {r * std::cos(theta_), r * std::sin(theta_)};
}

LogComplex LogComplex::reciprocal() const noexcept {
  if (is_zero()) return infinity();
  if (is_infinity()) return zero();
  return LogComplex(-t_, normalize_angle(-theta_));
}

LogComplex multiply(const LogComplex& a, const LogComplex& b) {
  if ((a.is_zero() && b.is_infinity()) || (a.is_infinity() && b.is_zero())) {
    throw Error(ErrorCode::indeterminate, "indeterminate product 0 * inf");
  }
  if (a.is_zero() || b.is_zero()) return LogComplex::zero();
  if (a.is_infinity() || b.is_infinity()) return LogComplex::infinity();
  return LogComplex::from_log_polar(a.log_modulus() + b.log_modulus(), a.arg() + b.arg());
}

LogComplex add(const LogComplex& a, const LogComplex& b, Strictness strictness) {
  if (a.is_infinity() || b.is_infinity()) {
    if (a.is_infinity() && b.is_infinity() && strictness == Strictness::strict) {
      throw Error(ErrorCode::indeterminate, "indeterminate sum inf + inf");
    }
    return LogComplex::infinity();
  }
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;

  const LogComplex& big = a.log_modulus() >= b.log_modulus() ? a : b;
  const LogComplex& small = a.log_modulus() >= b.log_modulus() ? b : a;
  const double m = std::exp(small.log_modulus() - big.log_modulus());
  const double dth = small.arg() - big.arg();
  const double ur = m * std::cos(dth);
  const double ui = m * std::sin(dth);
  const double sr = 1.0 + ur;
  const double mod = std::hypot(sr, ui);
  if (mod <= 8.0 * std::numeric_limits<double>::epsilon()) return LogComplex::zero();
  // log|1+u| without the cancellation in log(mod) when |u| is small
  const double log_mod = mod * mod < 0.5 ? std::log(mod) : 0.5 * std::log1p(2.0 * ur + m * m);
  return LogComplex::from_log_polar(big.log_modulus() + log_mod, big.arg() + std::atan2(ui, sr));
}

LogComplex pow_real(const LogComplex& a, double p, Strictness strictness) {
  if (a.is_zero()) {
    if (p <= 0.0 && strictness == Strictness::strict) {
      throw Error(ErrorCode::domain, "zero raised to a non-positive power");
    }
    if (p > 0.0) return LogComplex::zero();
    return p == 0.0 ? LogComplex() : LogComplex::infinity();
  }
  if (a.is_infinity()) {
    if (p >= 0.0 && strictness == Strictness::strict) {
      throw Error(ErrorCode::domain, "infinity raised to a non-negative power");
    }
    if (p > 0.0) return LogComplex::infinity();
    return p == 0.0 ? LogComplex() : LogComplex::zero();
  }
  if (p == 0.0) return LogComplex();
  return LogComplex::from_log_polar(p * a.log_modulus(), p * a.arg());
}

namespace {

// Both moduli <= 1.
double chordal_inside(double t1, double th1, double t2, double th2) noexcept {
  const double r1 = std::exp(t1);
  const double r2 = std::exp(t2);
  const std::complex<double> w1{r1 * std::cos(th1), r1 * std::sin(th1)};
  const std::complex<double> w2{r2 * std::cos(th2), r2 * std::sin(th2)};
  return std::abs(w1 - w2) / (std::sqrt(1.0 + r1 * r1) * std::sqrt(1.0 + r2 * r2));
}

}  // namespace

double chordal(const LogComplex& w1, const LogComplex& w2) noexcept {
  if (w1 == w2) return 0.0;
  const double t1 = w1.log_modulus();
  const double t2 = w2.log_modulus();
  double d = 0.0;
  if (t1 <= 0.0 && t2 <= 0.0) {
    d = chordal_inside(t1, w1.arg(), t2, w2.arg());
  } else if (t1 >= 0.0 && t2 >= 0.0) {
    d = chordal_inside(-t1, -w1.arg(), -t2, -w2.arg());
  } else {
    const LogComplex& s = t1 < t2 ? w1 : w2;
    const LogComplex& l = t1 < t2 ? w2 : w1;
    // u = s / l has modulus < 1; divide numerator and denominator by |l|
    const double um = std::exp(s.log_modulus() - l.log_modulus());
    const double dth = s.arg() - l.arg();
    const std::complex<double> one_minus_u{1.0 - um * std::cos(dth), -um * std::sin(dth)};
    const double s2 = std::exp(2.0 * s.log_modulus());
    const double l_inv2 = std::exp(-2.0 * l.log_modulus());
    d = std::abs(one_minus_u) / (std::sqrt(1.0 + s2) * std::sqrt(l_inv2 + 1.0));
  }
  return std::min(d, 1.0);
}

SpherePoint to_sphere(const LogComplex& w) noexcept {
  if (w.is_zero()) return {0.0, 0.0, -1.0};
  if (w.is_infinity()) return {0.0, 0.0, 1.0};
  const double t = w.log_modulus();
  const double e = std::exp(-std::abs(t));
  const double e2 = e * e;
  const double sech = 2.0 * e / (1.0 + e2);
  const double tanh_abs = -std::expm1(-2.0 * std::abs(t)) / (1.0 + e2);
  return {sech * std::cos(w.arg()), sech * std::sin(w.arg()), t < 0.0 ? -tanh_abs : tanh_abs};
}

}  // namespace zlab

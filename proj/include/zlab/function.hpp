#pragma once

#include <optional>
#include <vector>

#include "zlab/log_complex.hpp"
#include "zlab/polynomial.hpp"

namespace zlab {

/// R(z) = L * prod (z - gamma_i)^{l_i} / prod (z - beta_j)^{j_j}.
class Rational {
 public:
  /// Validates L != 0, positive multiplicities, distinct zero points,
  /// distinct pole points and disjointness of zeros and poles.
  Rational(cplx scalar, std::vector<Root> zeros, std::vector<Root> poles);

  cplx scalar() const noexcept { return scalar_; }
  const std::vector<Root>& zeros() const noexcept { return zeros_; }
  const std::vector<Root>& poles() const noexcept { return poles_; }
  int zero_order() const noexcept;  // L1
  int pole_order() const noexcept;  // L2
  bool is_constant() const noexcept { return zeros_.empty() && poles_.empty(); }

  Rational reciprocal() const;
  Rational with_scalar(cplx scalar) const;

  /// R~(gamma_i) = R(z)/(z - gamma_i)^{l_i} at z = gamma_i.
  cplx tilde_reduce(std::size_t zero_index) const;
  /// R^(beta_j) = R(z)(z - beta_j)^{j_j} at z = beta_j.
  cplx hat_reduce(std::size_t pole_index) const;

 private:
  cplx scalar_;
  std::vector<Root> zeros_;
  std::vector<Root> poles_;
};

enum class FunctionKind { polynomial, rational, exp_rational };

/// One of P, R or R * e^P.
///
/// A polynomial keeps its own Polynomial and also a Rational view (L = a_k,
/// zeros = roots, no poles), which is what the evaluators use.
class Function {
 public:
  static Function polynomial(Polynomial p);
  static Function rational(Rational r);
  static Function exp_rational(Rational r, Polynomial exponent);

  FunctionKind kind() const noexcept { return kind_; }
  const Rational& rational_part() const noexcept { return rational_; }
  /// The exponent P; null unless exp_rational.
  const Polynomial* exponent() const noexcept { return exponent_ ? &*exponent_ : nullptr; }
  /// The polynomial itself; null unless polynomial.
  const Polynomial* as_polynomial() const noexcept { return poly_ ? &*poly_ : nullptr; }

  /// 1/f. Zeros and poles swap and P becomes -P; 1/P is a rational.
  Function reciprocal() const;
  /// For exp_rational, L moved into the constant term of P (so L = 1);
  /// other kinds are returned unchanged.
  Function folded() const;

 private:
  Function(FunctionKind kind, Rational r, std::optional<Polynomial> exponent,
           std::optional<Polynomial> poly);

  FunctionKind kind_;
  Rational rational_;
  std::optional<Polynomial> exponent_;
  std::optional<Polynomial> poly_;
};

/// log f(z) = Log L + sum l_i Log(z - gamma_i) - sum j_j Log(z - beta_j) + P(z),
/// reduced mod 2*pi once at the end. Zero at a zero of R, infinity at a pole.
LogComplex eval_log(const Function& f, cplx z);
LogComplex eval_log(const Function& f, cplx_ld z);

/// log f(z) on the principal branch of each factor, before reduction.
/// Throws Error(singularity) at a zero or pole of R.
cplx_ld log_value(const Function& f, cplx_ld z);

/// f(k z + k rho zeta) / rho^alpha, with the evaluation point assembled in
/// long double.
LogComplex rescaled_eval(const Function& f, double alpha, long double k, cplx_ld z,
                         long double rho, cplx zeta);

/// f'/f. Throws Error(singularity) at a zero or pole of R.
cplx log_derivative(const Function& f, cplx z);
cplx_ld log_derivative(const Function& f, cplx_ld z);

/// |f'| / (1 + |f|^2), from log|f| and |f'/f| without overflow. At a zero or
/// pole of R the analytic limit is returned.
double spherical_derivative(const Function& f, cplx z);

}  // namespace zlab

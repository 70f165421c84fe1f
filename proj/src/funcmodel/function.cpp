#include "zlab/function.hpp"

#include <cmath>

#include "zlab/error.hpp"

namespace zlab {

namespace {

void check_distinct(const std::vector<Root>& roots, const char* what) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].mult < 1) {
      throw Error(ErrorCode::invalid_spec, std::string(what) + " multiplicity must be positive");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (roots[i].point == roots[j].point) {
        throw Error(ErrorCode::invalid_spec, std::string(what) + " points must be distinct");
      }
    }
  }
}

cplx int_pow(cplx z, int e) {
  cplx r{1.0, 0.0};
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

cplx_ld widen(cplx z) { return {z.real(), z.imag()}; }

LogComplex from_log_sum(cplx_ld s) {
  return LogComplex::from_log_polar(static_cast<double>(s.real()),
                                    static_cast<double>(normalize_angle(s.imag())));
}

// log f(w) when w is neither a zero nor a pole of R.
struct LogSum {
  LogComplex::Kind kind = LogComplex::Kind::finite;
  cplx_ld value{};
};

LogSum log_sum(const Function& f, cplx_ld w) {
  const Rational& r = f.rational_part();
  LogSum out;
  for (const Root& z : r.zeros()) {
    const cplx_ld d = w - widen(z.point);
    if (d == cplx_ld{}) return {LogComplex::Kind::zero, {}};
    out.value += static_cast<long double>(z.mult) * std::log(d);
  }
  for (const Root& p : r.poles()) {
    const cplx_ld d = w - widen(p.point);
    if (d == cplx_ld{}) return {LogComplex::Kind::infinity, {}};
    out.value -= static_cast<long double>(p.mult) * std::log(d);
  }
  out.value += std::log(widen(r.scalar()));
  if (const Polynomial* p = f.exponent()) out.value += p->eval(w);
  return out;
}

}  // namespace

Rational::Rational(cplx scalar, std::vector<Root> zeros, std::vector<Root> poles)
    : scalar_(scalar), zeros_(std::move(zeros)), poles_(std::move(poles)) {
  if (scalar_ == cplx{}) throw Error(ErrorCode::invalid_spec, "rational scalar must be nonzero");
  check_distinct(zeros_, "zero");
  check_distinct(poles_, "pole");
  for (const Root& z : zeros_) {
    for (const Root& p : poles_) {
      if (z.point == p.point) throw Error(ErrorCode::invalid_spec, "zeros and poles must be disjoint");
    }
  }
}

int Rational::zero_order() const noexcept {
  int n = 0;
  for (const Root& z : zeros_) n += z.mult;
  return n;
}

int Rational::pole_order() const noexcept {
  int n = 0;
  for (const Root& p : poles_) n += p.mult;
  return n;
}

Rational Rational::reciprocal() const { return Rational(1.0 / scalar_, poles_, zeros_); }

Rational Rational::with_scalar(cplx scalar) const { return Rational(scalar, zeros_, poles_); }

cplx Rational::tilde_reduce(std::size_t i) const {
  if (i >= zeros_.size()) throw Error(ErrorCode::invalid_spec, "zero index out of range");
  const cplx g = zeros_[i].point;
  cplx v = scalar_;
  for (std::size_t p = 0; p < zeros_.size(); ++p) {
    if (p != i) v *= int_pow(g - zeros_[p].point, zeros_[p].mult);
  }
  for (const Root& q : poles_) v /= int_pow(g - q.point, q.mult);
  return v;
}

cplx Rational::hat_reduce(std::size_t j) const {
  if (j >= poles_.size()) throw Error(ErrorCode::invalid_spec, "pole index out of range");
  const cplx b = poles_[j].point;
  cplx v = scalar_;
  for (const Root& z : zeros_) v *= int_pow(b - z.point, z.mult);
  for (std::size_t q = 0; q < poles_.size(); ++q) {
    if (q != j) v /= int_pow(b - poles_[q].point, poles_[q].mult);
  }
  return v;
}

Function::Function(FunctionKind kind, Rational r, std::optional<Polynomial> exponent,
                   std::optional<Polynomial> poly)
    : kind_(kind), rational_(std::move(r)), exponent_(std::move(exponent)), poly_(std::move(poly)) {}

Function Function::polynomial(Polynomial p) {
  Rational r(p.leading(), p.roots(), {});
  return Function(FunctionKind::polynomial, std::move(r), std::nullopt, std::move(p));
}

Function Function::rational(Rational r) {
  return Function(FunctionKind::rational, std::move(r), std::nullopt, std::nullopt);
}

Function Function::exp_rational(Rational r, Polynomial exponent) {
  return Function(FunctionKind::exp_rational, std::move(r), std::move(exponent), std::nullopt);
}

Function Function::reciprocal() const {
  switch (kind_) {
    case FunctionKind::polynomial:
    case FunctionKind::rational:
      return rational(rational_.reciprocal());
    case FunctionKind::exp_rational:
      return exp_rational(rational_.reciprocal(), exponent_->negated());
  }
  return *this;
}

Function Function::folded() const {
  if (kind_ != FunctionKind::exp_rational || rational_.scalar() == cplx{1.0, 0.0}) return *this;
  return exp_rational(rational_.with_scalar({1.0, 0.0}),
                      exponent_->plus_constant(std::log(rational_.scalar())));
}

LogComplex eval_log(const Function& f, cplx_ld z) {
  const LogSum s = log_sum(f, z);
  if (s.kind == LogComplex::Kind::zero) return LogComplex::zero();
  if (s.kind == LogComplex::Kind::infinity) return LogComplex::infinity();
  return from_log_sum(s.value);
}

cplx_ld log_value(const Function& f, cplx_ld z) {
  const LogSum s = log_sum(f, z);
  if (s.kind != LogComplex::Kind::finite) {
    throw Error(ErrorCode::singularity, "logarithm at a zero or pole");
  }
  return s.value;
}

LogComplex eval_log(const Function& f, cplx z) { return eval_log(f, widen(z)); }

LogComplex rescaled_eval(const Function& f, double alpha, long double k, cplx_ld z,
                         long double rho, cplx zeta) {
  const cplx_ld w = k * z + (k * rho) * widen(zeta);
  const LogSum s = log_sum(f, w);
  if (s.kind == LogComplex::Kind::zero) return LogComplex::zero();
  if (s.kind == LogComplex::Kind::infinity) return LogComplex::infinity();
  return from_log_sum(s.value - static_cast<long double>(alpha) * std::log(rho));
}

cplx_ld log_derivative(const Function& f, cplx_ld z) {
  const Rational& r = f.rational_part();
  cplx_ld d{};
  for (const Root& g : r.zeros()) {
    const cplx_ld diff = z - widen(g.point);
    if (diff == cplx_ld{}) throw Error(ErrorCode::singularity, "log-derivative at a zero");
    d += static_cast<long double>(g.mult) / diff;
  }
  for (const Root& b : r.poles()) {
    const cplx_ld diff = z - widen(b.point);
    if (diff == cplx_ld{}) throw Error(ErrorCode::singularity, "log-derivative at a pole");
    d -= static_cast<long double>(b.mult) / diff;
  }
  if (const Polynomial* p = f.exponent()) d += p->derivative(z);
  return d;
}

cplx log_derivative(const Function& f, cplx z) {
  const cplx_ld d = log_derivative(f, widen(z));
  return {static_cast<double>(d.real()), static_cast<double>(d.imag())};
}

double spherical_derivative(const Function& f, cplx z) {
  const Rational& r = f.rational_part();
  const Polynomial* p = f.exponent();
  const double re_p = p ? p->eval(z).real() : 0.0;
  for (std::size_t i = 0; i < r.zeros().size(); ++i) {
    if (z == r.zeros()[i].point) {
      if (r.zeros()[i].mult >= 2) return 0.0;
      return std::exp(std::log(std::abs(r.tilde_reduce(i))) + re_p);
    }
  }
  for (std::size_t j = 0; j < r.poles().size(); ++j) {
    if (z == r.poles()[j].point) {
      if (r.poles()[j].mult >= 2) return 0.0;
      return std::exp(-(std::log(std::abs(r.hat_reduce(j))) + re_p));
    }
  }
  const LogSum s = log_sum(f, widen(z));
  const long double a = std::fabs(s.value.real());
  const long double d = std::abs(log_derivative(f, widen(z)));
  const long double e = std::exp(-a);
  return static_cast<double>(d * e / (1.0L + e * e));
}

}  // namespace zlab

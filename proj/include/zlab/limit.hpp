#pragma once

#include <variant>

#include "zlab/function.hpp"
#include "zlab/log_complex.hpp"

namespace zlab {

/// c * (A zeta + C)^e
struct PowerLimit {
  cplx c{1.0, 0.0};
  cplx a{1.0, 0.0};
  cplx shift{};
  int exponent = 1;
};

/// exp(A0 + A1 zeta)
struct ExpLimit {
  cplx a0{};
  cplx a1{1.0, 0.0};
};

/// F(shift + scale * zeta)
struct PrecompositionLimit {
  Function base;
  cplx shift{};
  cplx scale{1.0, 0.0};
};

using LimitFunction = std::variant<PowerLimit, ExpLimit, PrecompositionLimit>;

LogComplex eval_limit(const LimitFunction& g, cplx zeta);
LimitFunction reciprocal(const LimitFunction& g);

/// Structural equality with relative tolerance on every parameter.
bool same_limit(const LimitFunction& a, const LimitFunction& b, double tol = 1e-9);

/// Tolerance comparison of two complex numbers: |a - b| <= tol * max(1, |a|, |b|).
bool close(cplx a, cplx b, double tol = 1e-9) noexcept;

/// Equality of R e^P as functions: R compared factor by factor, P compared
/// coefficientwise with the constant term taken mod 2*pi*i.
bool same_function(const Function& a, const Function& b, double tol = 1e-9);

}  // namespace zlab

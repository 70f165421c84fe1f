#pragma once

#include "zlab/family.hpp"
#include "zlab/function.hpp"
#include "zlab/limit.hpp"

namespace zlab {

/// Throws Error(domain) unless -1 < alpha < 1.
void check_alpha(double alpha);

/// (z - beta)^k: {(A zeta + C)^k}, whatever alpha and beta.
FamilySet classify_monome(int k, cplx beta, double alpha);
FamilySet classify_polynomial(const Polynomial& p, double alpha);
/// Throws Error(degenerate) for a constant R.
FamilySet classify_rational(const Rational& r, double alpha);
FamilySet classify_exp(const Function& f, double alpha);

/// Dispatches on the function kind. Exp-rational functions are classified
/// with L folded into the constant term of P.
FamilySet classify(const Function& f, double alpha);

/// The admissible arg A1 for exp-rational f when alpha != 0 and k >= 2:
/// closed arcs (k = 2) or the whole circle (k >= 3).
ArgSet exp_arg_arcs(double arg_ak, int k, double alpha);

/// Whether g lies in one of the families (arguments compared to 1e-9,
/// moduli free). Throws Error(unsupported_form) for a constant candidate.
bool membership(const LimitFunction& g, const FamilySet& families);

}  // namespace zlab

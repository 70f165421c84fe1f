#include "zlab/recipe.hpp"

#include <cmath>

#include "zlab/classifier.hpp"
#include "zlab/error.hpp"

namespace zlab {

namespace {

cplx_ld widen(cplx z) { return {z.real(), z.imag()}; }

void require_positive(double a, const char* what) {
  if (!(a > 0.0)) throw Error(ErrorCode::target_mismatch, std::string(what) + " must be positive");
}

void require_n(long long n) {
  if (n < 1) throw Error(ErrorCode::invalid_spec, "sequence index must be >= 1");
}

// Zero-centered rescaling for a zero of order l at gamma (0 < alpha < 1):
// rho_n = (A/n)^{l/(l-alpha)}, n z_n - gamma = C (A/n)^{alpha/(l-alpha)}.
Recipe::Generator centered_generator(int l, cplx gamma, double alpha, double a, cplx c) {
  const long double ll = l;
  const long double q = alpha / (ll - alpha);
  const long double aa = a;
  const cplx_ld cc = widen(c);
  const cplx_ld g = widen(gamma);
  return [=](long long n) {
    require_n(n);
    const long double nn = static_cast<long double>(n);
    RecipeStep s;
    s.term.k = nn;
    s.term.rho = std::pow(aa / nn, ll / (ll - alpha));
    s.term.z = (std::pow(aa, q) * cc + g * std::pow(nn, q)) / std::pow(nn, 1.0L + q);
    return s;
  };
}

// alpha < 0 with no poles: rho_n = (A/n)^{k/(k-alpha)}, z_n = (C/A) rho_n.
Recipe::Generator negative_generator(int k, double alpha, double a, cplx c) {
  const long double kk = k;
  const long double aa = a;
  const cplx_ld cc = widen(c);
  return [=](long long n) {
    require_n(n);
    const long double nn = static_cast<long double>(n);
    RecipeStep s;
    s.term.k = nn;
    s.term.rho = std::pow(aa / nn, kk / (kk - alpha));
    s.term.z = (cc / aa) * s.term.rho;
    return s;
  };
}

// (n, b/n, c/n): exact precomposition.
Recipe::Generator affine_generator(cplx b, double c) {
  const cplx_ld bb = widen(b);
  const long double cc = c;
  return [=](long long n) {
    require_n(n);
    const long double nn = static_cast<long double>(n);
    RecipeStep s;
    s.term.k = nn;
    s.term.rho = cc / nn;
    s.term.z = bb / nn;
    return s;
  };
}

}  // namespace

std::string to_string(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::monome: return "monome";
    case RecipeKind::poly_alpha0: return "poly-alpha0";
    case RecipeKind::poly_pos: return "poly-pos";
    case RecipeKind::poly_neg: return "poly-neg";
    case RecipeKind::rational_alpha0: return "rational-alpha0";
    case RecipeKind::exp_precomp: return "exp-precomp";
    case RecipeKind::exp_ray_pinned: return "exp-ray-pinned";
    case RecipeKind::exp_interior: return "exp-interior";
    case RecipeKind::custom: return "custom";
  }
  return "unknown";
}

Recipe::Recipe(RecipeKind kind, Function f, double alpha, LimitFunction target, Exactness exactness,
               Generator generator)
    : kind_(kind),
      f_(std::move(f)),
      alpha_(alpha),
      target_(std::move(target)),
      exactness_(exactness),
      generator_(std::make_shared<const Generator>(std::move(generator))) {}

Recipe Recipe::dual() const {
  Recipe r = *this;
  r.dual_ = !dual_;
  r.f_ = f_.reciprocal();
  r.alpha_ = -alpha_;
  r.target_ = reciprocal(target_);
  return r;
}

bool operator==(const Recipe& a, const Recipe& b) {
  return a.kind_ == b.kind_ && a.dual_ == b.dual_ && a.alpha_ == b.alpha_ &&
         a.generator_ == b.generator_ && same_limit(a.target_, b.target_, 1e-12);
}

Recipe recipe_monome(int k, cplx beta, double alpha, double a, cplx c) {
  check_alpha(alpha);
  require_positive(a, "A");
  if (k < 1) throw Error(ErrorCode::invalid_spec, "monome degree must be >= 1");
  Function f = Function::polynomial(Polynomial({1.0, 0.0}, {{beta, k}}));
  return Recipe(RecipeKind::monome, std::move(f), alpha, PowerLimit{{1.0, 0.0}, a, c, k}, Exactness::exact,
                centered_generator(k, beta, alpha, a, c));
}

Recipe recipe_polynomial(const Polynomial& p, double alpha, double a, cplx c, std::size_t root_index) {
  return recipe_rational(Function::polynomial(p), alpha, a, c, root_index);
}

Recipe recipe_rational_alpha0(const Rational& r, cplx b, double c) {
  require_positive(c, "c");
  Function f = Function::rational(r);
  if (r.is_constant()) throw Error(ErrorCode::degenerate, "rational function is constant");
  return Recipe(RecipeKind::rational_alpha0, f, 0.0, PrecompositionLimit{f, b, c}, Exactness::exact,
                affine_generator(b, c));
}

Recipe recipe_exp_precomp(const Function& f, cplx b, double c) {
  require_positive(c, "c");
  if (f.kind() != FunctionKind::exp_rational) {
    throw Error(ErrorCode::invalid_spec, "exp precomposition needs an exp-rational function");
  }
  return Recipe(RecipeKind::exp_precomp, f, 0.0, PrecompositionLimit{f, b, c}, Exactness::exact,
                affine_generator(b, c));
}

Recipe recipe_rational(const Function& f, double alpha, double a, cplx c, std::size_t index) {
  check_alpha(alpha);
  require_positive(a, "A");
  const Rational& r = f.rational_part();
  const bool is_exp = f.kind() == FunctionKind::exp_rational;
  if (!is_exp && r.is_constant()) throw Error(ErrorCode::degenerate, "rational function is constant");

  if (alpha == 0.0) {
    if (is_exp) return recipe_exp_precomp(f, c, a);
    RecipeKind kind = f.kind() == FunctionKind::polynomial ? RecipeKind::poly_alpha0 : RecipeKind::rational_alpha0;
    return Recipe(kind, f, 0.0, PrecompositionLimit{f, c, a}, Exactness::exact, affine_generator(c, a));
  }
  if (alpha < 0.0) {
    if (!r.poles().empty()) return recipe_rational(f.reciprocal(), -alpha, a, c, index).dual();
    if (is_exp) throw Error(ErrorCode::target_mismatch, "no pole families: f has no poles");
    return Recipe(RecipeKind::poly_neg, f, alpha, PowerLimit{r.scalar(), a, c, r.zero_order()},
                  Exactness::limit_only, negative_generator(r.zero_order(), alpha, a, c));
  }
  if (r.zeros().empty()) {
    if (is_exp) throw Error(ErrorCode::target_mismatch, "no zero families: f has no zeros");
    return recipe_rational(f.reciprocal(), -alpha, a, c, index).dual();
  }
  if (index >= r.zeros().size()) throw Error(ErrorCode::target_mismatch, "zero index out of range");
  const Root& zero = r.zeros()[index];
  cplx coeff = r.tilde_reduce(index);
  if (is_exp) coeff = std::exp(std::log(coeff) + f.exponent()->eval(zero.point));
  return Recipe(RecipeKind::poly_pos, f, alpha, PowerLimit{coeff, a, c, zero.mult}, Exactness::limit_only,
                centered_generator(zero.mult, zero.point, alpha, a, c));
}

Recipe recipe_custom(const Function& f, double alpha, LimitFunction target, Recipe::Generator gen) {
  return Recipe(RecipeKind::custom, f, alpha, std::move(target), Exactness::limit_only, std::move(gen));
}

}  // namespace zlab

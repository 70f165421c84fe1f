#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdio>

#include "zlab/classifier.hpp"
#include "zlab/error.hpp"
#include "zlab/locus.hpp"
#include "zlab/recipe.hpp"

namespace zlab {

namespace {

using ld = long double;
constexpr ld kTwoPiL = 2.0L * std::numbers::pi_v<ld>;

cplx narrow(cplx_ld z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }
cplx_ld widen(cplx z) { return {z.real(), z.imag()}; }

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

const Polynomial& exp_polynomial(const Function& f) {
  if (f.kind() != FunctionKind::exp_rational) {
    throw Error(ErrorCode::invalid_spec, "construction needs an exp-rational function");
  }
  return *f.exponent();
}

struct PinResult {
  cplx_ld w;
  long long m = 0;
  int iterations = 0;
  ld residual = 0.0L;
};

// Solves log f(w) - alpha ln rho - A0 = 2 pi i m for w by damped Newton. The
// branch m is the nearest one at each iterate until the residual drops below
// 1e-3, then frozen.
PinResult pin_congruence(const Function& f, double alpha, ld rho, cplx_ld a0, cplx_ld w) {
  constexpr int kMaxIter = 100;
  constexpr ld kTol = 1e-10L;
  const ld shift = static_cast<ld>(alpha) * std::log(rho);
  long long m = 0;
  bool frozen = false;
  auto raw = [&](cplx_ld x) { return log_value(f, x) - shift - a0; };
  auto residual = [&](cplx_ld g) { return g - cplx_ld(0.0L, kTwoPiL * static_cast<ld>(m)); };
  auto pick = [&](cplx_ld g) {
    if (!frozen || std::fabs(residual(g).imag()) > std::numbers::pi_v<ld>) {
      m = std::llround(g.imag() / kTwoPiL);
    }
  };

  cplx_ld g = raw(w);
  pick(g);
  cplx_ld r = residual(g);
  int iter = 0;
  for (; iter < kMaxIter && std::abs(r) >= kTol; ++iter) {
    const cplx_ld d = log_derivative(f, w);
    if (d == cplx_ld{}) break;
    const cplx_ld step = -r / d;
    ld lambda = 1.0L;
    cplx_ld next = w + step;
    cplx_ld g_next = raw(next);
    pick(g_next);
    cplx_ld r_next = residual(g_next);
    while (!(std::abs(r_next) < std::abs(r)) && lambda > 1e-6L) {
      lambda *= 0.5L;
      next = w + lambda * step;
      g_next = raw(next);
      pick(g_next);
      r_next = residual(g_next);
    }
    w = next;
    r = r_next;
    if (std::abs(r) < 1e-3L) frozen = true;
  }
  if (!(std::abs(r) < kTol)) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "congruence solve did not converge: last iterate (%.17g, %.17g), residual %.3g",
                  static_cast<double>(w.real()), static_cast<double>(w.imag()), static_cast<double>(std::abs(r)));
    throw Error(ErrorCode::newton_divergence, buf);
  }
  return {w, m, iter, std::abs(r)};
}

void fill_local(StepDiagnostics& d, const Function& f, double alpha, ld n, ld rho, cplx_ld w) {
  d.local_a1 = narrow(n * rho * log_derivative(f, w));
  cplx_ld g = log_value(f, w) - static_cast<ld>(alpha) * std::log(rho);
  g.imag(std::remainder(g.imag(), kTwoPiL));
  d.local_a0 = narrow(g);
}

double interior_c0(const Polynomial& p, double alpha, double theta0) {
  const double phi = normalize_angle(std::arg(p.leading()));
  const double cs = std::cos(phi + p.degree() * theta0);
  if (!(cs < -1e-12)) {
    throw Error(ErrorCode::invalid_theta, fmt("theta0 = %.9g is not inside an interior window (cos = %.3g)", theta0, cs));
  }
  return -alpha / (std::abs(p.leading()) * cs);
}

}  // namespace

cplx interior_a1(const Function& f, double alpha, double theta0, double rho_scale) {
  const Polynomial& p = exp_polynomial(f);
  const int k = p.degree();
  const double c0 = interior_c0(p, alpha, theta0);
  return static_cast<double>(k) * p.leading() * std::pow(c0, (k - 1.0) / k) *
         std::polar(1.0, (k - 1) * theta0) * rho_scale;
}

Recipe recipe_exp_interior(const Function& f, double alpha, double theta0, const InteriorOptions& opt) {
  const Polynomial& p = exp_polynomial(f);
  const int k = p.degree();
  if (k < 2) throw Error(ErrorCode::invalid_spec, "interior construction needs degree >= 2");
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::domain, "interior construction needs 0 < alpha < 1");
  if (!(opt.rho_scale > 0.0)) throw Error(ErrorCode::target_mismatch, "rho_scale must be positive");
  const double c0 = interior_c0(p, alpha, theta0);
  const cplx a1 = interior_a1(f, alpha, theta0, opt.rho_scale);
  const Rational& r = f.rational_part();
  const ld jump = r.zero_order() - r.pole_order();
  // Limit of log f_{n,alpha}(0): the real part is fixed by the construction.
  const cplx a0{-alpha * std::log(opt.rho_scale) + std::log(std::abs(r.scalar())), opt.pinned ? opt.a0.imag() : 0.0};

  auto gen = [f, p, k, c0, alpha, theta0, jump, a0, opt](long long n) {
    if (n < 2) throw Error(ErrorCode::invalid_spec, "interior construction needs n >= 2");
    const ld nn = static_cast<ld>(n);
    const ld kk = k;
    const ld rho0 = 1.0L / (nn * std::pow(std::log(nn), (kk - 1.0L) / kk));
    const cplx_ld zhat = std::polar(std::pow(-std::log(rho0), 1.0L / kk) / nn, static_cast<ld>(theta0));
    const ld target = static_cast<ld>(alpha) * std::log(rho0);
    auto h = [&](ld t) {
      const cplx_ld w = nn * zhat * t;
      return -(p.eval(w).real() + jump * std::log(std::abs(w))) + target;
    };

    const ld lo = std::pow(static_cast<ld>(c0) / 2.0L, 1.0L / kk) * 0.9L;
    const ld hi = std::pow(2.0L * static_cast<ld>(c0), 1.0L / kk) * 1.1L;
    const ld center = std::pow(static_cast<ld>(c0), 1.0L / kk);
    // Of all sign changes on a fine partition, keep the one nearest C0^{1/k}.
    constexpr int kParts = 64;
    std::optional<std::pair<ld, ld>> bracket;
    ld prev_t = lo, prev_h = h(lo);
    for (int i = 1; i <= kParts; ++i) {
      const ld t = lo + (hi - lo) * i / kParts;
      const ld ht = h(t);
      if ((prev_h <= 0.0L) != (ht <= 0.0L) || ht == 0.0L) {
        const ld mid = 0.5L * (prev_t + t);
        if (!bracket || std::fabs(mid - center) < std::fabs(0.5L * (bracket->first + bracket->second) - center)) {
          bracket = std::pair(prev_t, t);
        }
      }
      prev_t = t;
      prev_h = ht;
    }
    if (!bracket) {
      throw Error(ErrorCode::no_root, fmt("no sign change in the t bracket: residuals %.6g .. %.6g",
                                          static_cast<double>(h(lo)), static_cast<double>(h(hi))));
    }
    std::uintmax_t max_iter = 200;
    const auto root = boost::math::tools::toms748_solve(h, bracket->first, bracket->second,
                                                        boost::math::tools::eps_tolerance<ld>(62), max_iter);
    const ld t = 0.5L * (root.first + root.second);
    const ld rho = rho0 * static_cast<ld>(opt.rho_scale);
    cplx_ld w = nn * zhat * t;

    RecipeStep s;
    s.diagnostics.c0 = c0;
    s.diagnostics.t = static_cast<double>(t);
    s.diagnostics.zhat = narrow(zhat);
    s.diagnostics.residual = static_cast<double>(h(t));
    if (opt.pinned) {
      const PinResult pin = pin_congruence(f, alpha, rho, widen(a0), w);
      w = pin.w;
      s.diagnostics.congruence = static_cast<double>(pin.residual);
      s.diagnostics.branch = pin.m;
      s.diagnostics.iterations = pin.iterations;
    }
    fill_local(s.diagnostics, f, alpha, nn, rho, w);
    s.term = {nn, w / nn, rho};
    return s;
  };
  return Recipe(RecipeKind::exp_interior, f, alpha, ExpLimit{a0, a1}, Exactness::limit_only, gen);
}

Recipe recipe_exp_interior_for_arg(const Function& f, double alpha, double arg_a1, const InteriorOptions& opt) {
  check_alpha(alpha);
  if (alpha == 0.0) throw Error(ErrorCode::domain, "interior construction needs alpha != 0");
  if (alpha < 0.0) {
    Recipe r = recipe_exp_interior_for_arg(f.reciprocal(), -alpha, arg_a1 + std::numbers::pi, opt);
    return r.dual();
  }
  const Polynomial& p = exp_polynomial(f);
  const int k = p.degree();
  if (k < 2) throw Error(ErrorCode::invalid_spec, "interior construction needs degree >= 2");
  const double phi = normalize_angle(std::arg(p.leading()));
  double best_theta = 0.0;
  double best_cos = 2.0;
  for (int m = 0; m < k - 1; ++m) {
    const double theta = normalize_angle((arg_a1 - phi + kTwoPi * m) / (k - 1));
    const double cs = std::cos(phi + k * theta);
    if (cs < best_cos) {
      best_cos = cs;
      best_theta = theta;
    }
  }
  if (best_cos < -1e-3) return recipe_exp_interior(f, alpha, best_theta, opt);
  if (best_cos > 1e-9) {
    throw Error(ErrorCode::infeasible_target, fmt("arg A1 = %.9g lies outside the admissible arcs%.0s", arg_a1, 0.0));
  }
  // At (or within 1e-3 of) a window edge: step 1e-3 further inside.
  double theta = best_theta;
  for (double step : {1e-3, -1e-3}) {
    if (std::cos(phi + k * (best_theta + step)) < std::cos(phi + k * theta)) theta = best_theta + step;
  }
  Recipe r = recipe_exp_interior(f, alpha, theta, opt);
  r.set_approximate_target(true);
  return r;
}

Recipe recipe_exp_ray_pinned(const Function& f, double alpha, cplx a1, cplx a0, const RayOptions& opt) {
  check_alpha(alpha);
  const Polynomial& p = exp_polynomial(f);
  const int k = p.degree();
  const RaySet rays = nonnormal_rays(p);
  if (opt.ray_index >= rays.angles.size()) throw Error(ErrorCode::target_mismatch, "ray index out of range");
  const double theta0 = rays.angles[opt.ray_index];
  const double phi = normalize_angle(std::arg(p.leading()));
  const double required = normalize_angle(phi + (k - 1) * theta0);
  if (a1 == cplx{} || std::abs(wrap_difference(std::arg(a1), required)) > kAngleTol) {
    throw Error(ErrorCode::infeasible_target,
                fmt("arg A1 = %.9g is not allowed on this ray (needs %.9g)", normalize_angle(std::arg(a1)), required));
  }
  if (opt.z0_modulus && !(*opt.z0_modulus > 0.0)) throw Error(ErrorCode::target_mismatch, "|z0| must be positive");
  if (!(opt.shrink_c > 0.0)) throw Error(ErrorCode::target_mismatch, "shrink constant must be positive");

  const Rational& r = f.rational_part();
  const bool closed_form = k == 1 && r.is_constant();
  const ld a1_mod = std::abs(a1);
  const cplx_ld A0 = widen(a0);

  auto gen = [=](long long n) {
    if (n < 2) throw Error(ErrorCode::invalid_spec, "ray construction needs n >= 2");
    const ld nn = static_cast<ld>(n);
    const ld radius = opt.z0_modulus ? nn * static_cast<ld>(*opt.z0_modulus)
                                     : std::pow(static_cast<ld>(opt.shrink_c) * std::log(nn), 1.0L / k);
    cplx_ld w = std::polar(radius, static_cast<ld>(theta0));
    RecipeStep s;
    ld rho = 0.0L;
    if (closed_form) {
      const cplx_ld lead = p.coefficients_ld().back();
      const cplx_ld c0 = p.coefficients_ld().front() + std::log(widen(r.scalar()));
      rho = a1_mod / (nn * std::abs(lead));
      const cplx_ld lin = lead * w + c0 - static_cast<ld>(alpha) * std::log(rho) - A0;
      const long long m = std::llround(lin.imag() / kTwoPiL);
      w = (A0 - c0 + static_cast<ld>(alpha) * std::log(rho) + cplx_ld(0.0L, kTwoPiL * m)) / lead;
      s.diagnostics.branch = m;
      s.diagnostics.iterations = 0;
      s.diagnostics.congruence = 0.0;
    } else {
      PinResult pin{};
      rho = a1_mod / (nn * std::abs(log_derivative(f, w)));
      for (int outer = 0; outer < 50; ++outer) {
        pin = pin_congruence(f, alpha, rho, A0, w);
        w = pin.w;
        const ld next = a1_mod / (nn * std::abs(log_derivative(f, w)));
        const bool settled = std::fabs(next / rho - 1.0L) < 1e-15L;
        rho = next;
        if (settled || alpha == 0.0) break;
      }
      pin = pin_congruence(f, alpha, rho, A0, w);
      w = pin.w;
      s.diagnostics.branch = pin.m;
      s.diagnostics.iterations = pin.iterations;
      s.diagnostics.congruence = static_cast<double>(pin.residual);
    }
    fill_local(s.diagnostics, f, alpha, nn, rho, w);
    s.term = {nn, w / nn, rho};
    return s;
  };
  return Recipe(RecipeKind::exp_ray_pinned, f, alpha, ExpLimit{a0, a1},
                closed_form ? Exactness::exact : Exactness::limit_only, gen);
}

}  // namespace zlab

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "zlab/function.hpp"
#include "zlab/limit.hpp"

namespace zlab {

/// One term (k_n, z_n, rho_n) of a rescaling sequence.
struct RescalingTerm {
  long double k = 1.0L;
  cplx_ld z{};
  long double rho = 1.0L;
};

/// Solver state reported alongside a term (fields unused by a recipe stay empty).
struct StepDiagnostics {
  std::optional<double> c0;
  std::optional<double> t;           // root of the real-part relation
  std::optional<cplx> zhat;          // z_n before scaling by t
  std::optional<double> residual;    // real-part relation residual
  std::optional<double> congruence;  // |G(w) - A0 - 2 pi i m| after pinning
  std::optional<long long> branch;   // m
  std::optional<int> iterations;
  std::optional<cplx> local_a1;      // k_n rho_n G'(k_n z_n)
  std::optional<cplx> local_a0;      // G(k_n z_n), imaginary part reduced to (-pi, pi]
};

struct RecipeStep {
  RescalingTerm term;
  StepDiagnostics diagnostics;
};

enum class RecipeKind {
  monome,
  poly_alpha0,
  poly_pos,
  poly_neg,
  rational_alpha0,
  exp_precomp,
  exp_ray_pinned,
  exp_interior,
  custom,
};

enum class Exactness { exact, limit_only };

std::string to_string(RecipeKind kind);

/// A deterministic map n -> (k_n, z_n, rho_n) aimed at one limit function of
/// f_{n,alpha}. The dual recipe reuses the generator for 1/f at -alpha with
/// the reciprocal target.
class Recipe {
 public:
  using Generator = std::function<RecipeStep(long long n)>;

  Recipe(RecipeKind kind, Function f, double alpha, LimitFunction target, Exactness exactness,
         Generator generator);

  RecipeKind kind() const noexcept { return kind_; }
  bool is_dual() const noexcept { return dual_; }
  const Function& function() const noexcept { return f_; }
  double alpha() const noexcept { return alpha_; }
  const LimitFunction& target() const noexcept { return target_; }
  Exactness exactness() const noexcept { return exactness_; }
  bool approximate_target() const noexcept { return approximate_; }
  void set_approximate_target(bool v) noexcept { approximate_ = v; }

  RecipeStep step(long long n) const { return (*generator_)(n); }

  Recipe dual() const;

  /// Same kind, dual flag, alpha, target and generator.
  friend bool operator==(const Recipe& a, const Recipe& b);

 private:
  RecipeKind kind_;
  bool dual_ = false;
  bool approximate_ = false;
  Function f_;
  double alpha_;
  LimitFunction target_;
  Exactness exactness_;
  std::shared_ptr<const Generator> generator_;
};

/// (z - beta)^k; exact for every n: M_{n,alpha} = (A zeta + C)^k.
Recipe recipe_monome(int k, cplx beta, double alpha, double a, cplx c);

/// Affine target for a polynomial: alpha = 0 gives P(A zeta + C) exactly;
/// alpha > 0 targets the zero family at root_index; alpha < 0 gives
/// a_k (A zeta + C)^k.
Recipe recipe_polynomial(const Polynomial& p, double alpha, double a, cplx c, std::size_t root_index = 0);

/// R(b + c zeta), exact for every n.
Recipe recipe_rational_alpha0(const Rational& r, cplx b, double c);

/// Zero families (alpha > 0, index into zeros) or pole families (alpha < 0,
/// index into poles) of R, or of R e^P; the zero-free and pole-free cases fall
/// back to the polynomial rules. Pole families are duals of zero recipes.
Recipe recipe_rational(const Function& f, double alpha, double a, cplx c, std::size_t index = 0);

/// f(b + c zeta) for exp-rational f at alpha = 0, exact for every n.
Recipe recipe_exp_precomp(const Function& f, cplx b, double c);

struct InteriorOptions {
  bool pinned = true;      // solve the full congruence, not only its real part
  double rho_scale = 1.0;  // rho_n multiplied by this
  cplx a0{};               // target constant; pinned mode only uses Im
  bool a0_given = false;
};

/// The interior-angle construction for k >= 2, 0 < alpha < 1. Throws
/// Error(invalid_theta) when theta0 is not strictly inside a window, and
/// Error(no_root) when the bracket holds no sign change.
Recipe recipe_exp_interior(const Function& f, double alpha, double theta0, const InteriorOptions& opt = {});

/// Interior construction chosen by the target arg A1 (any alpha != 0). The
/// angle theta0 solves arg a_k + (k-1) theta0 = arg A1 inside a window; an
/// arc endpoint is approached from 1e-3 inside and the recipe is flagged as
/// an approximate target. alpha < 0 runs on 1/f and returns the dual.
/// Throws Error(infeasible_target) when no window admits the angle.
Recipe recipe_exp_interior_for_arg(const Function& f, double alpha, double arg_a1, const InteriorOptions& opt = {});

/// Limit A1 of the interior construction.
cplx interior_a1(const Function& f, double alpha, double theta0, double rho_scale);

struct RayOptions {
  std::optional<double> z0_modulus;  // fixed |z0| (r_n = n |z0|); empty means shrinking
  double shrink_c = 4.0;             // r_n = (c ln n)^{1/k} in shrinking mode
  std::size_t ray_index = 0;         // index into nonnormal_rays(P).angles
};

/// Phase-pinned ray construction targeting exp(A0 + A1 zeta). Throws
/// Error(infeasible_target) when arg A1 is not the one forced by the ray,
/// and Error(newton_divergence) when the congruence solve fails.
Recipe recipe_exp_ray_pinned(const Function& f, double alpha, cplx a1, cplx a0, const RayOptions& opt = {});

/// Deterministic user-supplied sequence (used by negative controls).
Recipe recipe_custom(const Function& f, double alpha, LimitFunction target, Recipe::Generator gen);

}  // namespace zlab

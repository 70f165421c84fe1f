#include "zlab/verifier.hpp"

#include <algorithm>
#include <cmath>

#include "zlab/error.hpp"
#include "zlab/parallel.hpp"

namespace zlab {

namespace {

constexpr double kNoiseFloor = 1e-12;
constexpr double kDecreaseMargin = 1e-9;
constexpr double kPhaseWindow = 0.3;
constexpr double kMinClusterShare = 0.25;

struct SphereBuffer {
  std::vector<double> x, y, z;
  explicit SphereBuffer(std::size_t n) : x(n), y(n), z(n) {}
  void set(std::size_t i, const SpherePoint& p) {
    x[i] = p.x;
    y[i] = p.y;
    z[i] = p.z;
  }
  kernels::SphereView view() const { return {x.data(), y.data(), z.data()}; }
};

double phase_of(const LogComplex& w) { return w.is_finite() ? w.arg() : 0.0; }

LimitFunction rotate_phase(const LimitFunction& g, double delta) {
  if (const auto* e = std::get_if<ExpLimit>(&g)) return ExpLimit{e->a0 + cplx(0.0, delta), e->a1};
  if (const auto* p = std::get_if<PowerLimit>(&g)) {
    return PowerLimit{p->c * std::polar(1.0, delta), p->a, p->shift, p->exponent};
  }
  return g;
}

// Indices of the largest set of phases inside one circular window.
std::vector<bool> largest_cluster(const std::vector<double>& phases) {
  std::vector<bool> best(phases.size(), false);
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    std::vector<bool> member(phases.size(), false);
    std::size_t count = 0;
    for (std::size_t j = 0; j < phases.size(); ++j) {
      if (normalize_angle(phases[j] - phases[i]) <= kPhaseWindow) {
        member[j] = true;
        ++count;
      }
    }
    if (count > best_count) {
      best_count = count;
      best = member;
    }
  }
  return best;
}

}  // namespace

std::vector<cplx> grid_points(const GridSpec& grid, cplx center) {
  if (!(grid.radius > 0.0)) throw Error(ErrorCode::invalid_spec, "grid radius must be positive");
  if (grid.points_per_side < 5 || grid.points_per_side % 2 == 0) {
    throw Error(ErrorCode::invalid_spec, "grid points per side must be odd and >= 5");
  }
  if (!(grid.pole_guard >= 0.0)) throw Error(ErrorCode::invalid_spec, "pole guard must be >= 0");
  const int n = grid.points_per_side;
  const int half = n / 2;
  const double h = grid.radius / half;
  std::vector<cplx> pts;
  for (int i = -half; i <= half; ++i) {
    for (int j = -half; j <= half; ++j) {
      const cplx z{i * h, j * h};
      if (std::abs(z) <= grid.radius * (1.0 + 1e-12)) pts.push_back(center + z);
    }
  }
  return pts;
}

std::vector<long long> default_schedule() { return {10, 100, 1000, 10000, 100000, 1000000}; }

bool decreasing_tail(const std::vector<double>& errors, std::size_t count) {
  const std::size_t n = errors.size();
  const std::size_t first = n > count ? n - count : 0;
  for (std::size_t i = first + 1; i < n; ++i) {
    const double a = errors[i - 1], b = errors[i];
    const bool both_noise = a <= kNoiseFloor && b <= kNoiseFloor;
    if (!(both_noise || b < a * (1.0 - kDecreaseMargin))) return false;
  }
  return true;
}

ConvergenceReport verify_convergence(const Recipe& recipe, const LimitFunction& g, const GridSpec& grid,
                                     const std::vector<long long>& schedule, double tolerance, VerifyMode mode,
                                     kernels::Isa isa) {
  if (g.index() != recipe.target().index()) {
    throw Error(ErrorCode::inconsistent_target, "limit function is not of the recipe's target form");
  }
  if (schedule.empty()) throw Error(ErrorCode::invalid_spec, "empty schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (schedule[i] <= schedule[i - 1]) throw Error(ErrorCode::invalid_spec, "schedule must be strictly increasing");
  }
  const std::vector<cplx> pts = grid_points(grid);
  const Function& f = recipe.function();
  const double alpha = recipe.alpha();

  std::vector<RescalingTerm> terms;
  terms.reserve(schedule.size());
  for (long long n : schedule) terms.push_back(recipe.step(n).term);

  // f_{n,alpha} on the grid, shared by both passes below.
  std::vector<SphereBuffer> fvals;
  std::vector<double> fphase(schedule.size());
  for (std::size_t s = 0; s < schedule.size(); ++s) {
    const RescalingTerm& t = terms[s];
    SphereBuffer buf(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
      buf.set(i, to_sphere(rescaled_eval(f, alpha, t.k, t.z, t.rho, pts[i])));
    });
    fvals.push_back(std::move(buf));
    fphase[s] = phase_of(rescaled_eval(f, alpha, t.k, t.z, t.rho, {}));
  }

  ConvergenceReport rep;
  rep.schedule = schedule;
  rep.mode = mode;
  rep.tolerance = tolerance;
  rep.limit = g;
  const double g0 = phase_of(eval_limit(g, {}));
  for (double p : fphase) rep.phase_dispersion.push_back(wrap_difference(p, g0));

  rep.selected.assign(schedule.size(), true);
  if (mode == VerifyMode::subsequence) {
    rep.selected = largest_cluster(rep.phase_dispersion);
    const auto count = static_cast<std::size_t>(std::count(rep.selected.begin(), rep.selected.end(), true));
    if (static_cast<double>(count) < kMinClusterShare * static_cast<double>(schedule.size())) {
      throw Error(ErrorCode::empty_subsequence, "no phase cluster holds 25% of the schedule");
    }
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < schedule.size(); ++i) {
      if (rep.selected[i]) {
        sx += std::cos(rep.phase_dispersion[i]);
        sy += std::sin(rep.phase_dispersion[i]);
      }
    }
    rep.limit = rotate_phase(g, std::atan2(sy, sx));
  }

  SphereBuffer gbuf(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { gbuf.set(i, to_sphere(eval_limit(rep.limit, pts[i]))); });
  for (std::size_t s = 0; s < schedule.size(); ++s) {
    rep.sup_error.push_back(kernels::max_chordal(fvals[s].view(), gbuf.view(), pts.size(), isa));
  }

  std::vector<double> kept;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (rep.selected[i]) kept.push_back(rep.sup_error[i]);
  }
  const bool exact = recipe.exactness() == Exactness::exact;
  if (!decreasing_tail(kept)) {
    rep.reason = "non-decreasing error";
  } else if (!(kept.back() < tolerance) ||
             (exact && std::any_of(kept.begin(), kept.end(), [&](double e) { return !(e < tolerance); }))) {
    rep.reason = "final error above tolerance";
  }
  rep.pass = rep.reason.empty();
  return rep;
}

ConvergenceReport verify_convergence(const Function& f, double alpha, const Recipe& recipe,
                                     const LimitFunction& g, const GridSpec& grid,
                                     const std::vector<long long>& schedule, double tolerance, VerifyMode mode,
                                     kernels::Isa isa) {
  if (alpha != recipe.alpha() || !same_function(f, recipe.function())) {
    throw Error(ErrorCode::inconsistent_target, "recipe was built for a different function or alpha");
  }
  return verify_convergence(recipe, g, grid, schedule, tolerance, mode, isa);
}

RelationTable check_relations(const Recipe& recipe, const std::vector<long long>& schedule) {
  const Function& f = recipe.function();
  const Polynomial* p = f.exponent();
  if (p == nullptr || p->degree() < 2) {
    throw Error(ErrorCode::invalid_spec, "relation rows need an exponent of degree >= 2");
  }
  const int k = p->degree();
  const cplx_ld ak = p->coefficients_ld().back();
  const Rational& r = f.rational_part();
  const long double jump = r.zero_order() - r.pole_order();
  cplx a1_limit{}, a0_limit{};
  if (const auto* e = std::get_if<ExpLimit>(&recipe.target())) {
    a1_limit = e->a1;
    a0_limit = e->a0;
  }

  RelationTable table;
  table.k = k;
  table.schedule = schedule;
  table.rows.assign(k, {});
  const cplx_ld log_l = std::log(cplx_ld(r.scalar().real(), r.scalar().imag()));
  for (long long n : schedule) {
    const RescalingTerm t = recipe.step(n).term;
    const long double scale = t.k * t.rho;
    const cplx_ld w = t.k * t.z;
    double binom = 1.0;  // binom(k, j), built from j = k downward
    for (int j = k; j >= 1; --j) {
      const cplx_ld v = ak * static_cast<long double>(binom) * std::pow(scale, j) * std::pow(w, k - j);
      const cplx vd{static_cast<double>(v.real()), static_cast<double>(v.imag())};
      table.rows[k - j].push_back(std::abs(vd - (j == 1 ? a1_limit : cplx{})));
      if (j == 1) table.a1_value.push_back(vd);
      binom = binom * j / (k - j + 1);
    }
    const long double re = (p->eval(w) + log_l).real() + jump * std::log(std::abs(w)) -
                           static_cast<long double>(recipe.alpha()) * std::log(t.rho);
    table.a0_row.push_back(static_cast<double>(re) - a0_limit.real());
  }
  return table;
}

MartyField marty_scan(const Function& f, cplx center, double radius, int points_per_side,
                      const std::vector<long long>& schedule, kernels::Isa isa) {
  MartyField field;
  field.points = grid_points({radius, points_per_side, 0.0}, center);
  field.schedule = schedule;
  const std::size_t m = field.points.size();
  const Polynomial* poly = f.exponent() ? f.exponent() : f.as_polynomial();
  const Rational& r = f.rational_part();

  std::vector<double> cr, ci;
  if (poly) {
    for (const cplx& c : poly->coefficients()) {
      cr.push_back(c.real());
      ci.push_back(c.imag());
    }
  }
  std::vector<double> zr(m), zi(m), pr(m), pi(m), dr(m), di(m);
  for (long long n : schedule) {
    const double nd = static_cast<double>(n);
    for (std::size_t i = 0; i < m; ++i) {
      zr[i] = nd * field.points[i].real();
      zi[i] = nd * field.points[i].imag();
    }
    if (poly) kernels::horner_many(cr.data(), ci.data(), cr.size(), zr.data(), zi.data(), m, {pr.data(), pi.data(), dr.data(), di.data()}, isa);

    std::vector<double> vals(m);
    for (std::size_t i = 0; i < m; ++i) {
      const cplx w{zr[i], zi[i]};
      double sharp = 0.0;
      bool done = false;
      double t = 0.0;
      cplx d{};
      if (f.kind() == FunctionKind::polynomial) {
        const cplx pv{pr[i], pi[i]};
        if (pv == cplx{}) {
          sharp = spherical_derivative(f, w);
          done = true;
        } else {
          t = std::log(std::abs(pv));
          d = cplx{dr[i], di[i]} / pv;
        }
      } else if (f.kind() == FunctionKind::exp_rational) {
        const bool singular =
            std::any_of(r.zeros().begin(), r.zeros().end(), [&](const Root& z) { return z.point == w; }) ||
            std::any_of(r.poles().begin(), r.poles().end(), [&](const Root& z) { return z.point == w; });
        if (singular) {
          sharp = spherical_derivative(f, w);
          done = true;
        } else {
          t = std::log(std::abs(r.scalar())) + pr[i];
          d = {dr[i], di[i]};
          for (const Root& z : r.zeros()) {
            t += z.mult * std::log(std::abs(w - z.point));
            d += static_cast<double>(z.mult) / (w - z.point);
          }
          for (const Root& b : r.poles()) {
            t -= b.mult * std::log(std::abs(w - b.point));
            d -= static_cast<double>(b.mult) / (w - b.point);
          }
        }
      } else {
        sharp = spherical_derivative(f, w);
        done = true;
      }
      if (!done) {
        const double e = std::exp(-std::abs(t));
        sharp = std::abs(d) * e / (1.0 + e * e);
      }
      vals[i] = nd * sharp;
    }
    field.max_value.push_back(*std::max_element(vals.begin(), vals.end()));
    field.values.push_back(std::move(vals));
  }
  return field;
}

}  // namespace zlab

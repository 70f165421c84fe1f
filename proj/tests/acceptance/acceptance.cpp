// Runs the acceptance criteria and prints one PASS/FAIL line for each.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "zlab/classifier.hpp"
#include "zlab/locus.hpp"
#include "zlab/recipe.hpp"
#include "zlab/verifier.hpp"

using namespace zlab;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

Polynomial monomial(int k, cplx a = 1.0) { return Polynomial(a, {{{0.0, 0.0}, k}}); }
Rational unit() { return Rational(1.0, {}, {}); }
Function exp_of(Rational r, Polynomial p) { return Function::exp_rational(std::move(r), std::move(p)); }

const std::vector<long long> kSchedule{10, 100, 1000, 10000, 100000, 1000000};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

Outcome exact_identity() {
  Outcome o;
  double worst = 0.0;
  for (int k : {1, 2, 3}) {
    for (double alpha : {-0.5, 0.0, 0.5}) {
      const Recipe r = recipe_monome(k, 3.0, alpha, 2.0, {1.0, 1.0});
      const auto rep = verify_convergence(r, r.target(), GridSpec{2.0, 21, 0.05}, {10, 1000, 1000000}, 1e-9);
      for (double e : rep.sup_error) worst = std::max(worst, e);
      o.require(rep.pass, "k=" + std::to_string(k) + " alpha=" + sci(alpha) + ": " + rep.reason);
    }
  }
  o.detail = o.pass ? "max sup error " + sci(worst) : o.detail;
  return o;
}

Outcome ray_formula() {
  Outcome o;
  const auto rays = nonnormal_rays(monomial(2)).angles;
  const std::array<double, 4> expected{pi / 4, 3 * pi / 4, 5 * pi / 4, 7 * pi / 4};
  o.require(rays.size() == 4, "z^2 ray count");
  for (std::size_t i = 0; i < expected.size() && i < rays.size(); ++i) {
    o.require(std::abs(rays[i] - expected[i]) < 1e-12, "z^2 ray " + std::to_string(i));
  }
  for (int k = 1; k <= 6; ++k) {
    for (double arg : {0.0, 0.9, 4.2}) {
      const Polynomial p = monomial(k, std::polar(1.5, arg));
      for (int sign : {1, -1}) {
        const auto fam = ray_family(p, sign);
        for (int l = 0; l + 1 < k; ++l) {
          o.require(std::abs(normalize_angle(fam[l + 1] - fam[l]) - kTwoPi / k) < 1e-12,
                    "spacing k=" + std::to_string(k));
        }
      }
    }
  }
  return o;
}

Outcome marty_locus() {
  Outcome o;
  const Function g = exp_of(unit(), monomial(2));
  const auto on = marty_scan(g, std::polar(0.5, pi / 4), 0.1, 11, {5, 50});
  const auto off = marty_scan(g, {0.5, 0.0}, 0.1, 11, {5, 50});
  const double growth = on.max_value[1] / on.max_value[0];
  o.require(growth >= 10.0, "on-ray growth " + sci(growth));
  o.require(off.max_value[1] < 1e-2, "off-ray value " + sci(off.max_value[1]));
  if (o.pass) o.detail = "growth x" + sci(growth) + ", off-ray " + sci(off.max_value[1]);
  return o;
}

std::vector<Function> exp_battery() {
  return {exp_of(unit(), monomial(1)), exp_of(unit(), monomial(2)),
          exp_of(Rational(1.0, {{{0.0, 0.0}, 1}}, {}), monomial(3)),
          exp_of(Rational(1.0, {{{0.0, 0.0}, 1}}, {{{2.0, 0.0}, 1}}), monomial(2))};
}

Outcome alpha_independence() {
  Outcome o;
  int i = 0;
  for (const Function& f : exp_battery()) {
    o.require(same_family_set(classify(f, 0.25), classify(f, 0.75)), "f#" + std::to_string(i) + " positive");
    o.require(same_family_set(classify(f, -0.25), classify(f, -0.75)), "f#" + std::to_string(i) + " negative");
    ++i;
  }
  return o;
}

Outcome duality() {
  Outcome o;
  auto fs = exp_battery();
  fs.push_back(Function::rational(Rational(1.0, {{{0.0, 0.0}, 1}}, {{{2.0, 0.0}, 1}})));
  fs.push_back(Function::rational(Rational(1.0, {}, {{{0.0, 0.0}, 2}})));
  int i = 0;
  for (const Function& f : fs) {
    for (double alpha : {0.5, -0.5}) {
      o.require(same_family_set(classify(f.reciprocal(), -alpha), dual(classify(f, alpha))),
                "f#" + std::to_string(i) + " alpha=" + sci(alpha));
    }
    ++i;
  }
  return o;
}

Outcome interior_construction() {
  Outcome o;
  const Function g = exp_of(unit(), monomial(2));
  const Recipe r = recipe_exp_interior(g, 0.5, pi / 2, {.pinned = false});
  double worst = 0.0;
  for (long long n : kSchedule) worst = std::max(worst, std::abs(*r.step(n).diagnostics.residual));
  o.require(worst < 1e-10, "root residual " + sci(worst));

  const RecipeStep last = r.step(1000000);
  const double t = *last.diagnostics.t;
  o.require(std::abs(t - std::sqrt(0.5)) < 0.05 * std::sqrt(0.5), "t_n = " + sci(t));
  const double q = static_cast<double>(last.term.k * last.term.rho) * std::abs(static_cast<double>(last.term.k) * *last.diagnostics.zhat);
  o.require(std::abs(q - 1.0) < 0.05, "n rho (n zhat) = " + sci(q));

  const RelationTable rel = check_relations(r, kSchedule);
  for (std::size_t row = 0; row + 1 < rel.rows.size(); ++row) {
    for (std::size_t i = 1; i < kSchedule.size(); ++i) {
      o.require(rel.rows[row][i] < rel.rows[row][i - 1], "row j=" + std::to_string(rel.k - static_cast<int>(row)));
    }
  }
  if (o.pass) o.detail = "t_n=" + sci(t) + " ratio=" + sci(q) + " residual<=" + sci(worst);
  return o;
}

Outcome pinned_ray() {
  Outcome o;
  const Function ez = exp_of(unit(), monomial(1));
  const Recipe exact = recipe_exp_ray_pinned(ez, 0.0, 1.0, 0.0, {.z0_modulus = 1.0});
  const auto a = verify_convergence(exact, ExpLimit{0.0, 1.0}, GridSpec{2.0, 21, 0.05}, kSchedule, 1e-12);
  double worst = 0.0;
  for (double e : a.sup_error) worst = std::max(worst, e);
  o.require(worst < 1e-12, "e^z closed form error " + sci(worst));

  const Function g = exp_of(unit(), monomial(2));
  const Recipe lim = recipe_exp_ray_pinned(g, 0.0, std::polar(1.0, pi / 4), 0.0, {.shrink_c = 4.0});
  const auto b = verify_convergence(lim, lim.target(), GridSpec{1.0, 21, 0.05}, kSchedule, 1e-2);
  for (std::size_t i = 1; i < b.sup_error.size(); ++i) {
    o.require(b.sup_error[i] < b.sup_error[i - 1], "e^{z^2} error not decreasing at n=" + std::to_string(kSchedule[i]));
  }
  o.require(b.pass && b.sup_error.back() < 1e-2, "e^{z^2} final error " + sci(b.sup_error.back()));
  if (o.pass) o.detail = "exact " + sci(worst) + ", e^{z^2} final " + sci(b.sup_error.back());
  return o;
}

// Runs the command line tool; returns its exit status and stdout.
std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(ZLAB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome negative_controls() {
  Outcome o;
  const double da = 0.1;
  char limit[160];
  std::snprintf(limit, sizeof limit, "'{\"form\":\"exp\",\"A0\":[0,0],\"A1\":[%.17g,%.17g]}'", std::cos(da), std::sin(da));
  const auto [code, out] = run_cli("verify " + std::string(ZLAB_CONFIG_DIR) +
                                   "/exp_z.json --target exp-ray --params '{\"z0\":1}' --limit " + limit);
  o.require(code == 1, "exit code " + std::to_string(code));
  o.require(out.find("# reason: non-decreasing error") != std::string::npos, "reason line missing");

  const FamilySet ez = classify(exp_of(unit(), monomial(1)), 0.0);
  o.require(!membership(ExpLimit{0.0, {0.0, 1.0}}, ez), "e^{i zeta} accepted");
  o.require(membership(ExpLimit{std::log(5.0), 1.0}, ez), "5 e^{zeta} rejected");
  return o;
}

Outcome kernel_properties() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> tn(0.0, 4.0);
  std::uniform_real_distribution<double> th(0.0, kTwoPi);
  auto draw = [&] { return LogComplex::from_log_polar(tn(rng), th(rng)); };
  for (int i = 0; i < 10000; ++i) {
    const auto a = draw(), b = draw(), c = draw();
    const double ab = chordal(a, b);
    o.require(std::abs(ab - chordal(b, a)) <= 1e-15, "symmetry");
    o.require(ab >= 0.0 && ab <= 1.0, "bound");
    o.require(chordal(a, c) <= ab + chordal(b, c) + 1e-12, "triangle");
  }
  std::normal_distribution<double> moderate(0.0, 3.0);
  for (int i = 0; i < 10000; ++i) {
    const auto a = LogComplex::from_log_polar(moderate(rng), th(rng));
    const auto b = LogComplex::from_log_polar(moderate(rng), th(rng));
    const cplx ca = a.to_cartesian(), cb = b.to_cartesian();
    const cplx prod = (a * b).to_cartesian();
    o.require(std::abs(prod - ca * cb) <= 1e-12 * std::abs(ca * cb), "product");
    const cplx sum = (a + b).to_cartesian();
    o.require(std::abs(sum - (ca + cb)) <= 1e-12 * std::max(std::abs(ca), std::abs(cb)), "sum");
  }
  const Function f = exp_of(Rational({1.0, 0.5}, {{{0.3, 0.2}, 1}}, {{{-0.7, 0.4}, 1}}),
                            Polynomial({0.8, -0.3}, {{{0.1, 0.0}, 1}, {{-0.2, 0.5}, 1}}));
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  const double h = 1e-6;
  int points = 0;
  double worst = 0.0;
  while (points < 100) {
    const cplx z{u(rng), u(rng)};
    const double sd = spherical_derivative(f, z);
    if (!(sd > 1e-6)) continue;  // keep away from the zero and pole
    const double fd = chordal(eval_log(f, z + h), eval_log(f, z)) / h;
    worst = std::max(worst, std::abs(fd - sd) / sd);
    ++points;
  }
  o.require(worst < 1e-4, "spherical derivative rel. error " + sci(worst));
  if (o.pass) o.detail = "spherical derivative rel. error " + sci(worst);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_s;
  };
  const std::vector<Criterion> criteria{
      {"exact-identity suite", exact_identity, 1.0},
      {"ray formula", ray_formula, 0.0},
      {"marty-scan locus validation", marty_locus, 10.0},
      {"classifier alpha-independence", alpha_independence, 0.0},
      {"duality", duality, 0.0},
      {"interior construction", interior_construction, 5.0},
      {"pinned-ray convergence", pinned_ray, 0.0},
      {"negative controls", negative_controls, 0.0},
      {"kernel property suites", kernel_properties, 0.0},
  };
  int failures = 0;
  int index = 1;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0.0 && secs >= c.budget_s) o.require(false, "runtime " + sci(secs) + " s");
    std::printf("[%s] %d. %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", index++, c.name, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

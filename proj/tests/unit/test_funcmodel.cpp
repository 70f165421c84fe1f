#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "zlab/error.hpp"
#include "zlab/function.hpp"

using namespace zlab;
using std::numbers::pi;

namespace {

Polynomial monomial(int k, cplx a = 1.0) { return Polynomial(a, {{{0.0, 0.0}, k}}); }
Rational unit() { return Rational(1.0, {}, {}); }

cplx direct_eval(const Function& f, cplx z) {
  const Rational& r = f.rational_part();
  cplx v = r.scalar();
  for (const Root& g : r.zeros()) v *= std::pow(z - g.point, g.mult);
  for (const Root& b : r.poles()) v /= std::pow(z - b.point, b.mult);
  if (const Polynomial* p = f.exponent()) v *= std::exp(p->eval(z));
  return v;
}

std::vector<Root> random_points(std::mt19937_64& rng, int count) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::uniform_int_distribution<int> m(1, 2);
  std::vector<Root> out;
  for (int i = 0; i < count; ++i) out.push_back({{u(rng), u(rng)}, m(rng)});
  return out;
}

}  // namespace

TEST_CASE("product form expands to coefficients") {
  const Polynomial p({2.0, 1.0}, {{{1.0, 0.0}, 2}, {{0.0, -1.0}, 1}});
  CHECK(p.degree() == 3);
  std::mt19937_64 rng(20);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 50; ++i) {
    const cplx z{u(rng), u(rng)};
    const cplx direct = cplx(2.0, 1.0) * (z - 1.0) * (z - 1.0) * (z - cplx(0.0, -1.0));
    REQUIRE(std::abs(p.eval(z) - direct) <= 1e-12 * (1 + std::abs(direct)));
  }
  // Degree 8 with spread roots: relative coefficient agreement.
  std::vector<Root> roots = random_points(rng, 5);
  const Polynomial q({1.0, -0.5}, roots);
  const Polynomial back = Polynomial::from_coefficients(q.coefficients());
  for (int i = 0; i < 20; ++i) {
    const cplx z{u(rng), u(rng)};
    REQUIRE(std::abs(back.eval(z) - q.eval(z)) <= 1e-10 * (1 + std::abs(q.eval(z))));
  }
}

TEST_CASE("duplicate roots merge") {
  const Polynomial p(1.0, {{{1.0, 0.0}, 1}, {{1.0, 0.0}, 2}});
  REQUIRE(p.roots().size() == 1);
  CHECK(p.roots()[0].mult == 3);
  CHECK_THROWS_AS(Polynomial(0.0, {{{1.0, 0.0}, 1}}), Error);
  CHECK_THROWS_AS(Polynomial(1.0, {}), Error);
}

TEST_CASE("root finding recovers multiplicities") {
  const Polynomial p(3.0, {{{0.0, 0.0}, 2}, {{2.0, 1.0}, 1}, {{-1.0, 0.0}, 3}});
  const auto found = Polynomial::from_coefficients(p.coefficients());
  REQUIRE(found.roots().size() == 3);
  int total = 0;
  for (const Root& r : found.roots()) {
    total += r.mult;
    bool matched = false;
    for (const Root& s : p.roots()) {
      if (std::abs(r.point - s.point) < 1e-6 && r.mult == s.mult) matched = true;
    }
    CHECK(matched);
  }
  CHECK(total == 6);
  CHECK(found.leading() == cplx(3.0, 0.0));
}

TEST_CASE("rational invariants") {
  CHECK_THROWS_AS(Rational(0.0, {}, {}), Error);
  CHECK_THROWS_AS(Rational(1.0, {{{1.0, 0.0}, 1}}, {{{1.0, 0.0}, 1}}), Error);
  CHECK_THROWS_AS(Rational(1.0, {{{1.0, 0.0}, 1}, {{1.0, 0.0}, 2}}, {}), Error);
  CHECK_THROWS_AS(Rational(1.0, {{{1.0, 0.0}, 0}}, {}), Error);
  const Rational r(2.0, {{{0.0, 0.0}, 2}}, {{{1.0, 0.0}, 1}, {{2.0, 0.0}, 3}});
  CHECK(r.zero_order() == 2);
  CHECK(r.pole_order() == 4);
  CHECK_THROWS_AS(Function::exp_rational(unit(), Polynomial::from_coefficients({1.0})), Error);
}

TEST_CASE("eval_log examples") {
  const Function ze = Function::exp_rational(Rational(1.0, {{{0.0, 0.0}, 1}}, {}), monomial(1));
  const auto a = eval_log(ze, cplx{1.0, 0.0});
  CHECK(a.log_modulus() == doctest::Approx(1.0));
  CHECK(a.arg() == doctest::Approx(0.0));

  const Function pe = Function::exp_rational(Rational(1.0, {}, {{{0.0, 0.0}, 1}}), monomial(1));
  CHECK(eval_log(pe, cplx{0.0, 0.0}).is_infinity());
  CHECK(eval_log(ze, cplx{0.0, 0.0}).is_zero());

  const Function g = Function::exp_rational(unit(), monomial(2));
  const auto b = eval_log(g, cplx{30.0, 0.0});
  CHECK(b.log_modulus() == 900.0);
  CHECK(b.arg() == 0.0);
}

TEST_CASE("eval_log matches cartesian evaluation on random specs") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> count(0, 2);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto zeros = random_points(rng, count(rng));
    auto poles = random_points(rng, count(rng));
    std::vector<Root> exp_roots = random_points(rng, 1 + count(rng));
    try {
      const Function f = Function::exp_rational(Rational({u(rng) + 2.0, u(rng)}, zeros, poles),
                                                Polynomial({u(rng) + 1.5, u(rng)}, exp_roots));
      for (int i = 0; i < 10; ++i) {
        const cplx z{3 * u(rng), 3 * u(rng)};
        const cplx direct = direct_eval(f, z);
        if (!(std::abs(direct) > 1e-200 && std::abs(direct) < 1e200)) continue;
        const cplx via = eval_log(f, z).to_cartesian();
        REQUIRE(std::abs(via - direct) <= 1e-10 * std::abs(direct));
        ++compared;
      }
    } catch (const Error&) {
      // random zero and pole sets may collide; skip those specs
    }
  }
  CHECK(compared > 1000);
}

TEST_CASE("rescaled_eval examples") {
  const Function ez = Function::exp_rational(unit(), monomial(1));
  const auto a = rescaled_eval(ez, 0.0, 10.0L, {0.0L, 0.0L}, 0.1L, {1.0, 0.0});
  CHECK(a.log_modulus() == doctest::Approx(1.0).epsilon(1e-15));

  const Function z = Function::polynomial(monomial(1));
  const auto b = rescaled_eval(z, 0.5, 1.0L, {0.0L, 0.0L}, 1e-4L, {1.0, 0.0});
  CHECK(b.log_modulus() == doctest::Approx(-2.0 * std::log(10.0)).epsilon(1e-14));

  const auto c = rescaled_eval(ez, 0.0, 3.0L, {0.2L, 0.1L}, 0.5L, {0.3, -0.2});
  const auto d = eval_log(ez, cplx{3.0 * 0.2 + 1.5 * 0.3, 3.0 * 0.1 - 1.5 * 0.2});
  CHECK(c.log_modulus() == doctest::Approx(d.log_modulus()).epsilon(1e-14));
  CHECK(c.arg() == doctest::Approx(d.arg()).epsilon(1e-14));
}

TEST_CASE("log_derivative examples") {
  const Function ez = Function::exp_rational(unit(), monomial(1));
  CHECK(std::abs(log_derivative(ez, cplx{3.0, -2.0}) - 1.0) < 1e-15);
  const Function ze = Function::exp_rational(Rational(1.0, {{{0.0, 0.0}, 1}}, {}), monomial(1));
  CHECK(std::abs(log_derivative(ze, cplx{2.0, 0.0}) - 1.5) < 1e-15);
  CHECK_THROWS_AS(log_derivative(ze, cplx{0.0, 0.0}), Error);
}

TEST_CASE("log_derivative matches a central difference") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double h = 1e-6;
  for (int trial = 0; trial < 100; ++trial) {
    const Function f = Function::exp_rational(Rational({1.0, 0.5}, random_points(rng, 1), {}),
                                              Polynomial({1.0, u(rng)}, random_points(rng, 2)));
    const cplx z{2.0 + u(rng), 2.0 + u(rng)};
    const cplx lp(log_value(f, cplx_ld(z.real() + h, z.imag())));
    const cplx lm(log_value(f, cplx_ld(z.real() - h, z.imag())));
    cplx diff = lp - lm;
    diff.imag(std::remainder(diff.imag(), zlab::kTwoPi));  // branch correction
    const cplx fd = diff / (2.0 * h);
    const cplx exact = log_derivative(f, z);
    REQUIRE(std::abs(fd - exact) <= 1e-5 * std::abs(exact));
  }
}

TEST_CASE("spherical_derivative examples") {
  const Function ez = Function::exp_rational(unit(), monomial(1));
  CHECK(spherical_derivative(ez, cplx{0.0, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));
  const Function g = Function::exp_rational(unit(), monomial(2));
  const double v = spherical_derivative(g, cplx{30.0, 0.0});
  CHECK(std::isfinite(v));
  CHECK(v == 0.0);  // 60 e^{-900} underflows
  const double w = spherical_derivative(g, cplx{5.0, 0.0});
  CHECK(w == doctest::Approx(10.0 * std::exp(-25.0)).epsilon(1e-12));

  const Function z = Function::rational(Rational(1.0, {{{0.0, 0.0}, 1}}, {}));
  CHECK(spherical_derivative(z, cplx{0.0, 0.0}) == doctest::Approx(1.0));
  const Function z2 = Function::rational(Rational(1.0, {{{0.0, 0.0}, 2}}, {}));
  CHECK(spherical_derivative(z2, cplx{0.0, 0.0}) == 0.0);
  const Function inv = Function::rational(Rational(2.0, {}, {{{1.0, 0.0}, 1}}));
  CHECK(spherical_derivative(inv, cplx{1.0, 0.0}) == doctest::Approx(0.5));
}

TEST_CASE("spherical_derivative is inversion invariant and matches the chordal quotient") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double h = 1e-6;
  int checked = 0;
  while (checked < 100) {
    const Function f = Function::exp_rational(Rational({1.0, 0.3}, random_points(rng, 1), random_points(rng, 1)),
                                              Polynomial({0.5, u(rng)}, random_points(rng, 2)));
    const cplx z{2 * u(rng), 2 * u(rng)};
    const double sd = spherical_derivative(f, z);
    if (!(sd > 1e-8)) continue;
    const double fd = chordal(eval_log(f, z + h), eval_log(f, z)) / h;
    REQUIRE(std::abs(fd - sd) <= 1e-4 * sd);
    REQUIRE(std::abs(spherical_derivative(f.reciprocal(), z) - sd) <= 1e-8 * sd);
    ++checked;
  }
}

TEST_CASE("tilde and hat reductions") {
  const Rational a(1.0, {{{0.0, 0.0}, 1}}, {{{2.0, 0.0}, 1}});
  CHECK(std::abs(a.tilde_reduce(0) - cplx(-0.5, 0.0)) < 1e-15);
  CHECK(std::abs(a.hat_reduce(0) - cplx(2.0, 0.0)) < 1e-15);
  CHECK(std::abs(Rational(1.0, {{{0.0, 0.0}, 2}}, {}).tilde_reduce(0) - 1.0) < 1e-15);
  CHECK(std::abs(Rational(1.0, {{{0.0, 0.0}, 1}, {{1.0, 0.0}, 1}}, {}).tilde_reduce(1) - 1.0) < 1e-15);
  CHECK(std::abs(Rational(1.0, {}, {{{0.0, 0.0}, 1}}).hat_reduce(0) - 1.0) < 1e-15);
  CHECK(std::abs(Rational(1.0, {}, {{{0.0, 0.0}, 1}, {{1.0, 0.0}, 1}}).hat_reduce(0) + 1.0) < 1e-15);

  // R(gamma + eps) / (eps^l R~) -> 1
  const Rational r({1.0, 1.0}, {{{0.5, 0.0}, 2}, {{0.0, 1.0}, 1}}, {{{-1.0, 0.0}, 1}});
  const Function f = Function::rational(r);
  double prev = 1e300;
  for (double eps : {1e-2, 1e-4, 1e-6}) {
    const cplx v = eval_log(f, cplx(0.5 + eps, 0.0)).to_cartesian() / (eps * eps * r.tilde_reduce(0));
    const double err = std::abs(v - 1.0);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-5);
}

TEST_CASE("reciprocal and folding") {
  const Function f = Function::exp_rational(Rational(3.0, {{{1.0, 0.0}, 1}}, {{{2.0, 0.0}, 2}}), monomial(2));
  const Function g = f.reciprocal();
  CHECK(g.rational_part().zeros().size() == 1);
  CHECK(g.rational_part().zeros()[0].mult == 2);
  CHECK(g.exponent()->leading() == cplx(-1.0, 0.0));

  const Function h = f.folded();
  CHECK(h.rational_part().scalar() == cplx(1.0, 0.0));
  for (cplx z : {cplx(0.3, 0.2), cplx(-1.0, 0.5)}) {
    CHECK(std::abs(eval_log(h, z).to_cartesian() - eval_log(f, z).to_cartesian()) < 1e-12);
    CHECK(std::abs(eval_log(g, z).to_cartesian() * eval_log(f, z).to_cartesian() - 1.0) < 1e-12);
  }
  const Function p = Function::polynomial(Polynomial(2.0, {{{1.0, 0.0}, 1}}));
  CHECK(p.reciprocal().kind() == FunctionKind::rational);
}

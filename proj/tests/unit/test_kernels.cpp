#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "zlab/kernels.hpp"
#include "zlab/log_complex.hpp"
#include "zlab/polynomial.hpp"

namespace k = zlab::kernels;

namespace {

struct Points {
  std::vector<double> x, y, z;
  k::SphereView view() const { return {x.data(), y.data(), z.data()}; }
};

Points random_points(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> t(0.0, 5.0);
  std::uniform_real_distribution<double> th(0.0, zlab::kTwoPi);
  Points p;
  for (std::size_t i = 0; i < n; ++i) {
    const auto s = zlab::to_sphere(zlab::LogComplex::from_log_polar(t(rng), th(rng)));
    p.x.push_back(s.x);
    p.y.push_back(s.y);
    p.z.push_back(s.z);
  }
  return p;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  return a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar chordal kernel matches the reference") {
  std::mt19937_64 rng(10);
  const auto a = random_points(rng, 257), b = random_points(rng, 257);
  std::vector<double> out(257);
  k::scalar::chordal_many(a.view(), b.view(), out.size(), out.data());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double ref = 0.5 * std::hypot(a.x[i] - b.x[i], a.y[i] - b.y[i], a.z[i] - b.z[i]);
    REQUIRE(out[i] == doctest::Approx(ref).epsilon(1e-15));
  }
  CHECK(k::max_chordal(a.view(), b.view(), 0, k::Isa::scalar) == 0.0);
}

TEST_CASE("scalar horner matches Polynomial::eval") {
  const std::vector<zlab::cplx> coeffs{{1, 2}, {-3, 0.5}, {0, 1}, {2, -1}};
  const auto p = zlab::Polynomial::from_coefficients(coeffs);
  std::vector<double> cr, ci;
  for (auto c : coeffs) {
    cr.push_back(c.real());
    ci.push_back(c.imag());
  }
  std::vector<double> zr{0.0, 1.5, -2.0, 0.3}, zi{0.0, -0.5, 1.0, 2.2};
  std::vector<double> pr(4), pi(4), dr(4), di(4);
  k::scalar::horner_many(cr.data(), ci.data(), cr.size(), zr.data(), zi.data(), 4, {pr.data(), pi.data(), dr.data(), di.data()});
  for (int i = 0; i < 4; ++i) {
    const zlab::cplx z{zr[i], zi[i]};
    CHECK(std::abs(zlab::cplx(pr[i], pi[i]) - p.eval(z)) < 1e-12 * (1 + std::abs(p.eval(z))));
    CHECK(std::abs(zlab::cplx(dr[i], di[i]) - p.derivative(z)) < 1e-12 * (1 + std::abs(p.derivative(z))));
  }
}

TEST_CASE("isa selection") {
  CHECK(k::isa_available(k::Isa::scalar));
  CHECK(k::to_string(k::Isa::scalar) == "scalar");
  CHECK(k::isa_available(k::active_isa()));
}

#if defined(ZLAB_HAVE_AVX2)
TEST_CASE("avx2 kernels are bit-identical to scalar") {
  if (!k::isa_available(k::Isa::avx2)) {
    MESSAGE("avx2 not available on this CPU; skipped");
    return;
  }
  std::mt19937_64 rng(11);
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 31u, 441u, 1000u}) {
    const auto a = random_points(rng, n), b = random_points(rng, n);
    std::vector<double> s(n), v(n);
    k::scalar::chordal_many(a.view(), b.view(), n, s.data());
    k::avx2::chordal_many(a.view(), b.view(), n, v.data());
    REQUIRE(same_bits(s, v));
    REQUIRE(k::scalar::max_chordal(a.view(), b.view(), n) == k::avx2::max_chordal(a.view(), b.view(), n));
  }

  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (std::size_t ncoef : {1u, 2u, 3u, 7u, 13u}) {
    for (std::size_t n : {1u, 4u, 6u, 441u}) {
      std::vector<double> cr(ncoef), ci(ncoef), zr(n), zi(n);
      for (auto* v : {&cr, &ci, &zr, &zi}) {
        for (double& x : *v) x = u(rng);
      }
      std::vector<double> s[4], v[4];
      for (int j = 0; j < 4; ++j) {
        s[j].resize(n);
        v[j].resize(n);
      }
      k::scalar::horner_many(cr.data(), ci.data(), ncoef, zr.data(), zi.data(), n,
                             {s[0].data(), s[1].data(), s[2].data(), s[3].data()});
      k::avx2::horner_many(cr.data(), ci.data(), ncoef, zr.data(), zi.data(), n,
                           {v[0].data(), v[1].data(), v[2].data(), v[3].data()});
      for (int j = 0; j < 4; ++j) REQUIRE(same_bits(s[j], v[j]));
    }
  }
}
#endif

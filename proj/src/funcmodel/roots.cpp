#include <algorithm>
#include <cmath>

#include "zlab/error.hpp"
#include "zlab/polynomial.hpp"

namespace zlab {

namespace {

using ld = long double;

// Laguerre iteration on the dense polynomial a (ascending), started at x.
cplx_ld laguerre(const std::vector<cplx_ld>& a, cplx_ld x) {
  constexpr int kMaxIter = 400;
  // fractional steps that break limit cycles
  static constexpr ld kFrac[] = {0.0L, 0.5L, 0.25L, 0.75L, 0.13L, 0.38L, 0.62L, 0.88L, 1.0L};
  const int m = static_cast<int>(a.size()) - 1;
  const ld eps = std::numeric_limits<ld>::epsilon();
  for (int iter = 1; iter <= kMaxIter; ++iter) {
    cplx_ld b = a[m], d{}, f{};
    ld err = std::abs(b);
    const ld abx = std::abs(x);
    for (int j = m - 1; j >= 0; --j) {
      f = x * f + d;
      d = x * d + b;
      b = x * b + a[j];
      err = std::abs(b) + abx * err;
    }
    err *= eps;
    if (std::abs(b) <= err) return x;
    const cplx_ld g = d / b;
    const cplx_ld g2 = g * g;
    const cplx_ld h = g2 - 2.0L * f / b;
    const cplx_ld sq = std::sqrt(static_cast<ld>(m - 1) * (static_cast<ld>(m) * h - g2));
    cplx_ld gp = g + sq;
    const cplx_ld gm = g - sq;
    if (std::abs(gp) < std::abs(gm)) gp = gm;
    const cplx_ld dx = std::max(std::abs(gp), std::abs(gm)) > 0.0L
                           ? static_cast<ld>(m) / gp
                           : std::polar(1.0L + abx, static_cast<ld>(iter));
    const cplx_ld x1 = x - dx;
    if (x1 == x) return x;
    if (iter % 10 != 0) {
      x = x1;
    } else {
      x -= kFrac[(iter / 10) % 9] * dx;
    }
  }
  return x;
}

cplx_ld eval(const std::vector<cplx_ld>& a, cplx_ld z) {
  cplx_ld p{};
  for (std::size_t j = a.size(); j-- > 0;) p = p * z + a[j];
  return p;
}

cplx_ld eval_derivative(const std::vector<cplx_ld>& a, cplx_ld z) {
  cplx_ld d{};
  for (std::size_t j = a.size(); j-- > 1;) d = d * z + static_cast<ld>(j) * a[j];
  return d;
}

// Newton steps x -= m p/p' kept only while |p| decreases.
cplx_ld polish(const std::vector<cplx_ld>& a, cplx_ld x, int mult) {
  ld best = std::abs(eval(a, x));
  for (int i = 0; i < 20 && best > 0.0L; ++i) {
    const cplx_ld d = eval_derivative(a, x);
    if (d == cplx_ld{}) break;
    const cplx_ld next = x - static_cast<ld>(mult) * eval(a, x) / d;
    const ld r = std::abs(eval(a, next));
    if (!(r < best)) break;
    best = r;
    x = next;
  }
  return x;
}

}  // namespace

std::vector<Root> find_roots(const std::vector<cplx_ld>& ascending) {
  const int degree = static_cast<int>(ascending.size()) - 1;
  if (degree < 1 || ascending.back() == cplx_ld{}) {
    throw Error(ErrorCode::invalid_spec, "root finding needs a nonconstant polynomial");
  }
  std::vector<cplx_ld> work = ascending;
  std::vector<cplx_ld> raw;
  for (int m = degree; m >= 1; --m) {
    cplx_ld x = laguerre(work, cplx_ld{});
    raw.push_back(x);
    // synthetic division by (z - x)
    cplx_ld carry = work[m];
    for (int j = m - 1; j >= 0; --j) {
      const cplx_ld next = work[j];
      work[j] = carry;
      carry = next + x * carry;
    }
    work.pop_back();
  }

  ld scale = 1.0L;
  for (const cplx_ld& x : raw) scale = std::max(scale, std::abs(x));
  const ld tol = 1e-5L * scale;

  struct Cluster {
    cplx_ld sum;
    int count;
  };
  std::vector<Cluster> clusters;
  for (const cplx_ld& x : raw) {
    bool placed = false;
    for (Cluster& c : clusters) {
      if (std::abs(c.sum / static_cast<ld>(c.count) - x) <= tol) {
        c.sum += x;
        ++c.count;
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({x, 1});
  }

  std::vector<Root> roots;
  for (const Cluster& c : clusters) {
    const cplx_ld x = polish(ascending, c.sum / static_cast<ld>(c.count), c.count);
    roots.push_back({cplx(static_cast<double>(x.real()), static_cast<double>(x.imag())), c.count});
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.point.real() != b.point.real()) return a.point.real() < b.point.real();
    return a.point.imag() < b.point.imag();
  });
  return roots;
}

}  // namespace zlab

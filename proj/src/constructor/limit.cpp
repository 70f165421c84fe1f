#include "zlab/limit.hpp"

#include <cmath>

namespace zlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool same_roots(const std::vector<Root>& a, const std::vector<Root>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const Root& r : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && b[j].mult == r.mult && close(r.point, b[j].point, tol)) {
        used[j] = found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool close(cplx a, cplx b, double tol) noexcept {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

bool same_function(const Function& a, const Function& b, double tol) {
  const Rational& ra = a.rational_part();
  const Rational& rb = b.rational_part();
  if (!close(ra.scalar(), rb.scalar(), tol)) return false;
  if (!same_roots(ra.zeros(), rb.zeros(), tol) || !same_roots(ra.poles(), rb.poles(), tol)) return false;
  const Polynomial* pa = a.exponent();
  const Polynomial* pb = b.exponent();
  if ((pa == nullptr) != (pb == nullptr)) return false;
  if (pa == nullptr) return true;
  const auto& ca = pa->coefficients();
  const auto& cb = pb->coefficients();
  if (ca.size() != cb.size()) return false;
  for (std::size_t j = 1; j < ca.size(); ++j) {
    if (!close(ca[j], cb[j], tol)) return false;
  }
  const double scale = std::max({1.0, std::abs(ca[0]), std::abs(cb[0])});
  return std::abs(ca[0].real() - cb[0].real()) <= tol * scale &&
         std::abs(wrap_difference(ca[0].imag(), cb[0].imag())) <= tol * scale;
}

LogComplex eval_limit(const LimitFunction& g, cplx zeta) {
  return std::visit(
      overloaded{
          [&](const PowerLimit& p) {
            const cplx base = p.a * zeta + p.shift;
            if (base == cplx{}) return p.exponent > 0 ? LogComplex::zero() : LogComplex::infinity();
            const cplx s = std::log(p.c) + static_cast<double>(p.exponent) * std::log(base);
            return LogComplex::from_log_polar(s.real(), s.imag());
          },
          [&](const ExpLimit& e) {
            const cplx s = e.a0 + e.a1 * zeta;
            return LogComplex::from_log_polar(s.real(), s.imag());
          },
          [&](const PrecompositionLimit& q) { return eval_log(q.base, q.shift + q.scale * zeta); },
      },
      g);
}

LimitFunction reciprocal(const LimitFunction& g) {
  return std::visit(
      overloaded{
          [](const PowerLimit& p) -> LimitFunction {
            return PowerLimit{1.0 / p.c, p.a, p.shift, -p.exponent};
          },
          [](const ExpLimit& e) -> LimitFunction { return ExpLimit{-e.a0, -e.a1}; },
          [](const PrecompositionLimit& q) -> LimitFunction {
            return PrecompositionLimit{q.base.reciprocal(), q.shift, q.scale};
          },
      },
      g);
}

bool same_limit(const LimitFunction& a, const LimitFunction& b, double tol) {
  if (a.index() != b.index()) return false;
  if (const auto* p = std::get_if<PowerLimit>(&a)) {
    const auto& q = std::get<PowerLimit>(b);
    return p->exponent == q.exponent && close(p->c, q.c, tol) && close(p->a, q.a, tol) &&
           close(p->shift, q.shift, tol);
  }
  if (const auto* e = std::get_if<ExpLimit>(&a)) {
    const auto& d = std::get<ExpLimit>(b);
    return close(e->a0, d.a0, tol) && close(e->a1, d.a1, tol);
  }
  const auto& p = std::get<PrecompositionLimit>(a);
  const auto& q = std::get<PrecompositionLimit>(b);
  return close(p.shift, q.shift, tol) && close(p.scale, q.scale, tol) &&
         same_function(p.base, q.base, tol);
}

}  // namespace zlab

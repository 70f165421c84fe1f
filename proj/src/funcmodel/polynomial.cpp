#include "zlab/polynomial.hpp"

#include <cmath>

#include "zlab/error.hpp"

namespace zlab {

namespace {

void validate_degree(int degree) {
  if (degree < 1) throw Error(ErrorCode::invalid_spec, "polynomial degree must be >= 1");
  if (degree > kMaxDegree) {
    throw Error(ErrorCode::invalid_spec, "polynomial degree exceeds " + std::to_string(kMaxDegree));
  }
}

template <class T>
std::complex<T> horner(const std::vector<std::complex<T>>& c, std::complex<T> z) noexcept {
  std::complex<T> p{};
  for (std::size_t j = c.size(); j-- > 0;) p = p * z + c[j];
  return p;
}

template <class T>
std::complex<T> horner_derivative(const std::vector<std::complex<T>>& c, std::complex<T> z) noexcept {
  std::complex<T> d{};
  for (std::size_t j = c.size(); j-- > 1;) d = d * z + static_cast<T>(j) * c[j];
  return d;
}

}  // namespace

Polynomial::Polynomial(cplx leading, std::vector<Root> roots) {
  if (leading == cplx{}) throw Error(ErrorCode::invalid_spec, "leading coefficient must be nonzero");
  for (const Root& r : roots) {
    if (r.mult < 1) throw Error(ErrorCode::invalid_spec, "root multiplicity must be positive");
    bool merged = false;
    for (Root& existing : roots_) {
      if (existing.point == r.point) {
        existing.mult += r.mult;
        merged = true;
        break;
      }
    }
    if (!merged) roots_.push_back(r);
  }
  int degree = 0;
  for (const Root& r : roots_) degree += r.mult;
  validate_degree(degree);

  coeffs_ld_.assign(1, cplx_ld(leading.real(), leading.imag()));
  for (const Root& r : roots_) {
    const cplx_ld a(r.point.real(), r.point.imag());
    for (int m = 0; m < r.mult; ++m) {
      // multiply by (z - a)
      coeffs_ld_.insert(coeffs_ld_.begin(), cplx_ld{});
      for (std::size_t j = 0; j + 1 < coeffs_ld_.size(); ++j) coeffs_ld_[j] -= a * coeffs_ld_[j + 1];
    }
  }
  coeffs_.reserve(coeffs_ld_.size());
  for (const cplx_ld& c : coeffs_ld_) {
    coeffs_.emplace_back(static_cast<double>(c.real()), static_cast<double>(c.imag()));
  }
}

Polynomial Polynomial::from_coefficients(const std::vector<cplx>& ascending) {
  std::vector<cplx> c = ascending;
  while (!c.empty() && c.back() == cplx{}) c.pop_back();
  validate_degree(static_cast<int>(c.size()) - 1);
  Polynomial p;
  p.coeffs_ = c;
  for (const cplx& a : c) p.coeffs_ld_.emplace_back(a.real(), a.imag());
  p.roots_ = find_roots(p.coeffs_ld_);
  return p;
}

cplx Polynomial::eval(cplx z) const noexcept { return horner(coeffs_, z); }
cplx_ld Polynomial::eval(cplx_ld z) const noexcept { return horner(coeffs_ld_, z); }
cplx Polynomial::derivative(cplx z) const noexcept { return horner_derivative(coeffs_, z); }
cplx_ld Polynomial::derivative(cplx_ld z) const noexcept { return horner_derivative(coeffs_ld_, z); }

Polynomial Polynomial::plus_constant(cplx c) const {
  Polynomial p;
  p.coeffs_ = coeffs_;
  p.coeffs_ld_ = coeffs_ld_;
  p.coeffs_[0] += c;
  p.coeffs_ld_[0] += cplx_ld(c.real(), c.imag());
  p.roots_ = find_roots(p.coeffs_ld_);
  return p;
}

Polynomial Polynomial::negated() const {
  Polynomial p = *this;
  for (cplx& a : p.coeffs_) a = -a;
  for (cplx_ld& a : p.coeffs_ld_) a = -a;
  return p;
}

}  // namespace zlab

#pragma once

#include <complex>
#include <vector>

namespace zlab {

using cplx = std::complex<double>;
using cplx_ld = std::complex<long double>;

struct Root {
  cplx point;
  int mult = 1;
};

inline constexpr int kMaxDegree = 12;

/// Polynomial held in product form a_k * prod (z - r_i)^{m_i} and in dense
/// ascending coefficient form. Whichever form was given is authoritative; the
/// other is derived once at construction.
class Polynomial {
 public:
  /// Product form. Roots with equal points are merged.
  Polynomial(cplx leading, std::vector<Root> roots);

  /// Dense ascending coefficients a_0..a_k; trailing zeros are trimmed, and
  /// the roots are located numerically.
  static Polynomial from_coefficients(const std::vector<cplx>& ascending);

  cplx leading() const noexcept { return coeffs_.back(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Root>& roots() const noexcept { return roots_; }
  const std::vector<cplx>& coefficients() const noexcept { return coeffs_; }
  const std::vector<cplx_ld>& coefficients_ld() const noexcept { return coeffs_ld_; }

  cplx eval(cplx z) const noexcept;
  cplx_ld eval(cplx_ld z) const noexcept;
  cplx derivative(cplx z) const noexcept;
  cplx_ld derivative(cplx_ld z) const noexcept;

  /// P + c (the roots move, so they are recomputed).
  Polynomial plus_constant(cplx c) const;
  Polynomial negated() const;

 private:
  Polynomial() = default;

  std::vector<Root> roots_;
  std::vector<cplx> coeffs_;
  std::vector<cplx_ld> coeffs_ld_;
};

/// Roots of a dense polynomial (ascending coefficients, degree >= 1) with
/// multiplicities, by Laguerre iteration with deflation, Newton polishing
/// against the undeflated polynomial, and clustering of coincident roots.
std::vector<Root> find_roots(const std::vector<cplx_ld>& ascending);

}  // namespace zlab
